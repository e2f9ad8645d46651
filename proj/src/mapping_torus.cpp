#include "lefsec/mapping_torus.hpp"

#include <stdexcept>

namespace lefsec {

TorusElement torus_mul(const Automorphism& f, const TorusElement& x, const TorusElement& y) {
  return {concat(x.fiber, apply_power(f, y.fiber, -x.deck)), x.deck + y.deck};
}

TorusElement torus_inverse(const Automorphism& f, const TorusElement& x) {
  // (a, n)^{-1} = (f^{n}(a^{-1}), -n)
  return {apply_power(f, invert(x.fiber), x.deck), -x.deck};
}

bool torus_equal(const Automorphism& f, const TorusElement& x, const TorusElement& y) {
  return x.deck == y.deck && equal(f.ctx(), x.fiber, y.fiber);
}

Word rho_apply(std::span<const Automorphism> twists, const Word& base, const Word& fiber) {
  Word out = fiber;
  for (auto it = base.letters().rbegin(); it != base.letters().rend(); ++it) {
    if (it->kind != GenKind::x || it->index >= twists.size())
      throw std::out_of_range("base letter " + format_generator(*it) + " out of range");
    const Automorphism& t = twists[it->index];
    out = apply_power(t, out, it->sign > 0 ? -1 : 1);
  }
  return out;
}

BouquetElement bouquet_mul(std::span<const Automorphism> twists, const BouquetElement& x,
                           const BouquetElement& y) {
  return {concat(x.fiber, rho_apply(twists, x.base, y.fiber)), concat(x.base, y.base)};
}

BouquetElement bouquet_inverse(std::span<const Automorphism> twists, const BouquetElement& x) {
  const Word base_inv = invert(x.base);
  return {rho_apply(twists, base_inv, invert(x.fiber)), base_inv};
}

bool bouquet_equal(std::span<const Automorphism> twists, const BouquetElement& x, const BouquetElement& y) {
  if (twists.empty()) return x.base == y.base && x.fiber == y.fiber;
  return x.base == y.base && equal(twists.front().ctx(), x.fiber, y.fiber);
}

Automorphism compose_factorization(std::span<const Automorphism> twists) {
  if (twists.empty()) throw std::invalid_argument("compose_factorization: empty factorization");
  Automorphism tau = twists.front();
  for (std::size_t i = 1; i < twists.size(); ++i) tau = compose(twists[i], tau);
  return tau;
}

BouquetElement iota(std::span<const Automorphism> twists, const TorusElement& x, const Automorphism* tau) {
  if (tau) {
    Automorphism composed = compose_factorization(twists);
    if (h1_shadow(composed) != h1_shadow(*tau))
      throw std::invalid_argument("iota: twists do not compose to the torus monodromy on homology");
    if (!same_action(composed, *tau))
      throw std::invalid_argument("iota: twists do not compose to the torus monodromy");
  }
  std::vector<Generator> loop;
  for (std::uint32_t i = 0; i < twists.size(); ++i) loop.push_back(gen_x(i));
  const BouquetElement step{Word{}, x.deck >= 0 ? Word(loop) : invert(Word(loop))};
  BouquetElement out{x.fiber, Word{}};
  for (long long n = 0; n < (x.deck >= 0 ? x.deck : -x.deck); ++n) out = bouquet_mul(twists, out, step);
  return out;
}

Word concat_decompose(std::span<const Automorphism> twists, std::span<const Word> parts) {
  if (parts.size() != twists.size())
    throw std::invalid_argument("concat_decompose: need one part per twist");
  Word acc;
  // (tau_{i-1} o ... o tau_1)^{-1}: tau_{i-1}^{-1} acts first.
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Word transported = parts[i];
    for (std::size_t j = i; j-- > 0;) transported = apply_power(twists[j], transported, -1);
    acc = concat(acc, transported);
  }
  return acc;
}

bool concat_decompose_check(std::span<const Automorphism> twists, const Word& alpha,
                            std::span<const Word> parts) {
  if (twists.empty()) throw std::invalid_argument("concat_decompose_check: empty factorization");
  return equal(twists.front().ctx(), alpha, concat_decompose(twists, parts));
}

bool twisted_conj_check(const Automorphism& f, const Word& alpha, const Word& beta, const Word& zeta) {
  const Word rhs = concat(concat(zeta, beta), apply_power(f, invert(zeta), -1));
  return equal(f.ctx(), alpha, rhs);
}

std::optional<IntVector> twisted_conj_h1(const IntMatrix& fM, const IntVector& alphaH, const IntVector& betaH) {
  const IntMatrix finv = unimodular_inverse(fM);
  const IntMatrix lhs = IntMatrix::identity(fM.rows()) - finv;
  return in_image(lhs, alphaH - betaH);
}

}  // namespace lefsec
