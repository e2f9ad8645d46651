// Lefschetz fibrations over the disk described by an ordered list of signed
// vanishing cycles. The boundary monodromy is tau = tau_{V_k} o ... o tau_{V_1}.
//
// Every cycle carries its homology class; the pi_1 data (a based
// representative word and a verified twist table) is optional and is needed
// only by the certificate layer.

#pragma once

#include <optional>
#include <vector>

#include "lefsec/mapping_torus.hpp"

namespace lefsec {

struct VanishingCycle {
  H1Vector h1;
  int sign = 1;
  std::optional<Word> based_word;
  std::optional<Automorphism> twist_table;

  bool has_pi1_data() const { return based_word.has_value() && twist_table.has_value(); }
};

struct FibrationSpec {
  unsigned genus = 1;
  std::vector<VanishingCycle> cycles;
  std::optional<IntMatrix> claimed_matrix;
  std::optional<Automorphism> claimed_table;

  std::size_t size() const { return cycles.size(); }
  std::size_t dimension() const { return 2 * genus; }
  GroupCtx surface() const { return GroupCtx::surface(genus); }
  bool has_pi1_data() const;
};

/// Checks every structural invariant: vector lengths, signs, table
/// verification, table/cycle agreement on homology, based words abelianizing
/// to their cycle, and agreement with any claimed monodromy.
Check validate(const FibrationSpec& spec);

std::vector<TwistMatrix> twist_matrices(const FibrationSpec& spec);
IntMatrix monodromy(const FibrationSpec& spec);
/// Twist tables in factorization order; throws when a cycle lacks one.
std::vector<Automorphism> twist_tables(const FibrationSpec& spec);
/// The composed pi_1 monodromy; requires tables on every cycle and k >= 1.
Automorphism monodromy_table(const FibrationSpec& spec);

enum class HurwitzDirection { left, right };

/// Moves act on the adjacent pair at positions (i, i+1), 0-based.
/// left:  (V_i, V_{i+1}) -> (V_{i+1}, tau_{V_{i+1}}(V_i))
/// right: (V_i, V_{i+1}) -> (tau_{V_i}^{-1}(V_{i+1}), V_i)
/// Based words and tables travel with the cycles when present. Throws
/// std::out_of_range unless i + 1 < k.
FibrationSpec hurwitz_move(const FibrationSpec& spec, std::size_t i, HurwitzDirection dir);

/// All specs reachable with at most `depth` moves, H_1 data only, in BFS
/// discovery order and deduplicated on the (h1, sign) tuple.
std::vector<FibrationSpec> hurwitz_orbit(const FibrationSpec& spec, unsigned depth);

/// Homology class of the loop V^m: sum_i B_i (m_i v_i) with B_1 = Id and
/// B_i = (T_{i-1} ... T_1)^{-1}.
H1Vector section_h1_class(const FibrationSpec& spec, const std::vector<long long>& m);

/// Image of section_h1_class(m) in H_1(Sigma) / Im(Id - tau_*), as
/// normal-form coordinates of `boundary_cokernel(spec)`.
IntVector double_delta(const FibrationSpec& spec, const std::vector<long long>& m);
CokernelPresentation boundary_cokernel(const FibrationSpec& spec);

struct DistinctSectionsWitness {
  std::size_t cycle = 0;  // 0-based j
  long long multiple = 0;
  friend bool operator==(const DistinctSectionsWitness&, const DistinctSectionsWitness&) = default;
};

/// Smallest (j, m), j first, with 1 <= m <= m_bound and m v_j outside
/// Im(Id - tau_*). Negative m need no separate search: the image is a
/// subgroup.
std::optional<DistinctSectionsWitness> distinct_sections_criterion(const FibrationSpec& spec,
                                                                   long long m_bound = 8);

}  // namespace lefsec
