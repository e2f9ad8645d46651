// Fundamental groups of mapping tori and of the fibration over a bouquet of
// circles, as semidirect products with the fiber group.
//
// Sign convention: in pi_1(Sigma) x| Z the deck generator t acts by
// conjugation as f^{-1}, i.e. t a t^{-1} = f^{-1}(a). Likewise the free
// generator gamma_i acts on the fiber by the inverse of the i-th twist.

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lefsec/mapping_class.hpp"

namespace lefsec {

struct TorusElement {
  Word fiber;
  long long deck = 0;
  friend bool operator==(const TorusElement&, const TorusElement&) = default;
};

struct BouquetElement {
  Word fiber;
  /// Word in x_1..x_k standing for gamma_1..gamma_k.
  Word base;
  friend bool operator==(const BouquetElement&, const BouquetElement&) = default;
};

/// (x.fiber * f^{-x.deck}(y.fiber), x.deck + y.deck)
TorusElement torus_mul(const Automorphism& f, const TorusElement& x, const TorusElement& y);
TorusElement torus_inverse(const Automorphism& f, const TorusElement& x);
/// Equality in the semidirect product: same deck, fibers equal in the group.
bool torus_equal(const Automorphism& f, const TorusElement& x, const TorusElement& y);

/// rho(w) applied to a fiber word: rho(gamma_i) = twists[i]^{-1}, and
/// rho(l_1 ... l_n) = rho(l_1) o ... o rho(l_n). Throws std::out_of_range on
/// a base letter beyond the number of twists.
Word rho_apply(std::span<const Automorphism> twists, const Word& base, const Word& fiber);

BouquetElement bouquet_mul(std::span<const Automorphism> twists, const BouquetElement& x,
                           const BouquetElement& y);
BouquetElement bouquet_inverse(std::span<const Automorphism> twists, const BouquetElement& x);
bool bouquet_equal(std::span<const Automorphism> twists, const BouquetElement& x, const BouquetElement& y);

/// tau_k o ... o tau_1.
Automorphism compose_factorization(std::span<const Automorphism> twists);

/// (x.fiber, e) . (e, gamma_1 ... gamma_k)^{x.deck}. When `tau` is given it
/// must agree with the composed twists on homology and in the group;
/// otherwise std::invalid_argument is thrown.
BouquetElement iota(std::span<const Automorphism> twists, const TorusElement& x,
                    const Automorphism* tau = nullptr);

/// alpha == alpha_1 . tau_1^{-1}(alpha_2) . (tau_2 tau_1)^{-1}(alpha_3) ...
Word concat_decompose(std::span<const Automorphism> twists, std::span<const Word> parts);
bool concat_decompose_check(std::span<const Automorphism> twists, const Word& alpha,
                            std::span<const Word> parts);

/// alpha == zeta . beta . f^{-1}(zeta^{-1})
bool twisted_conj_check(const Automorphism& f, const Word& alpha, const Word& beta, const Word& zeta);

/// zeta with (Id - fM^{-1}) zeta = alphaH - betaH, or nullopt. Throws
/// std::invalid_argument when fM is not invertible over Z.
std::optional<IntVector> twisted_conj_h1(const IntMatrix& fM, const IntVector& alphaH, const IntVector& betaH);

}  // namespace lefsec
