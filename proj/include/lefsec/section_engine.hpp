// Decision layer for sections of Lefschetz fibrations over the disk.
//
// A boundary class ([alpha], 1) extends over the disk iff alpha splits as
//   alpha ~ alpha_1 . tau_1^{-1}(alpha_2) ... (tau_{k-1} ... tau_1)^{-1}(alpha_k)
// with alpha_i ~ zeta_i . V_i^{m_i} . tau_i^{-1}(zeta_i^{-1}); the extension
// is smoothable iff every m_i is 0 or 1. At the pi_1 tier we check
// certificates (m, zeta) and search for them within bounds. The abelianized
// condition is a finite integer linear system, so non-extendability is
// certified there.

#pragma once

#include <optional>
#include <vector>

#include "lefsec/fibration.hpp"

namespace lefsec {

struct SectionCertificate {
  Word alpha;
  std::vector<long long> m;
  std::vector<Word> zetas;
  friend bool operator==(const SectionCertificate&, const SectionCertificate&) = default;
};

enum class Tier { pi1_certified, h1_necessary, h1_refuted };
const char* to_string(Tier t);

struct H1Witness {
  std::vector<IntVector> zetas;
  IntVector m;
};

/// `extendable` is true only for pi1_certified verdicts. An h1_necessary
/// verdict means the abelianized condition holds and nothing more.
struct Verdict {
  bool extendable = false;
  std::optional<bool> smoothable;
  Tier tier = Tier::h1_refuted;
  std::optional<SectionCertificate> certificate;
  std::optional<H1Witness> h1_witness;
};

/// The parts alpha_i = zeta_i . V_i^{m_i} . tau_i^{-1}(zeta_i^{-1}).
std::vector<Word> certificate_parts(const FibrationSpec& spec, const SectionCertificate& cert);

/// Throws std::invalid_argument on missing pi_1 data or an arity mismatch.
/// A rejected certificate falls back to the homology test on alpha.
Verdict verify_certificate(const FibrationSpec& spec, const SectionCertificate& cert);

/// Solves alpha = sum_i B_i((Id - T_i^{-1}) zeta_i + m_i v_i) over the
/// integers in the unknowns (zeta_1..zeta_k, m).
Verdict h1_extendable(const FibrationSpec& spec, const H1Vector& alphaH);

struct SearchBounds {
  unsigned len_bound = 4;
  long long m_bound = 3;
};

/// First certificate in order of (sum |zeta_i|, sum |m_i|), ties
/// lexicographic. An empty result is not a proof of non-extendability.
std::optional<SectionCertificate> search_certificate(const FibrationSpec& spec, const Word& alpha,
                                                     SearchBounds bounds = {});

/// Given a certificate for `spec`, produce one with the same alpha for
/// hurwitz_move(spec, i, dir).
SectionCertificate transport_certificate(const FibrationSpec& spec, const SectionCertificate& cert,
                                         std::size_t i, HurwitzDirection dir);

/// Section of the fibration over a 2-complex with one vertex, k loops and
/// 2-cells attached along words in the loops. The total-space group is
/// pi_1(Sigma) x|_rho F_k.
///   1. images[i].base == gamma_i, so the section composed with the
///      projection is the identity on the loops;
///   2. each attaching word acts trivially through rho, so the monodromy
///      descends to the 2-complex;
///   3. the product of images along each attaching word has trivial fiber
///      component, and its base component is the attaching word itself,
///      which is trivial in the base group.
Check verify_splitting(std::size_t k, std::span<const Automorphism> twists,
                       std::span<const BouquetElement> images, std::span<const Word> attach_words);

}  // namespace lefsec
