// Random generators and independent oracles shared by the unit and
// acceptance suites. Nothing here calls the code paths it is used to check.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "lefsec/fibration.hpp"
#include "lefsec/section_engine.hpp"

namespace lefsec::testing {

using Rng = std::mt19937_64;

inline long long uniform(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline Generator random_generator(Rng& rng, const GroupCtx& ctx) {
  Generator g = ctx.generator(static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(ctx.num_generators()) - 1)));
  return uniform(rng, 0, 1) ? g : g.inverse();
}

/// Freely reduced word of exactly `len` letters.
inline Word random_reduced_word(Rng& rng, const GroupCtx& ctx, std::size_t len) {
  std::vector<Generator> letters;
  while (letters.size() < len) {
    Generator g = random_generator(rng, ctx);
    if (!letters.empty() && letters.back().is_inverse_of(g)) continue;
    letters.push_back(g);
  }
  return Word(letters);
}

inline Word random_word(Rng& rng, const GroupCtx& ctx, std::size_t max_len) {
  return random_reduced_word(rng, ctx, static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(max_len))));
}

inline IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, -bound, bound);
  return m;
}

inline IntVector random_vector(Rng& rng, std::size_t n, long long bound) {
  IntVector v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(uniform(rng, -bound, bound));
  return v;
}

/// Exhaustive search for x in [-B, B]^cols with A x = b.
inline std::optional<IntVector> box_solve(const IntMatrix& a, const IntVector& b, long long bound) {
  const std::size_t n = a.cols();
  std::vector<long long> x(n, -bound);
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i < a.rows() && ok; ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < n; ++j) s += a(i, j) * x[j];
      ok = s == b[i];
    }
    if (ok) {
      IntVector out;
      for (long long v : x) out.emplace_back(v);
      return out;
    }
    std::size_t p = n;
    while (p > 0 && x[p - 1] == bound) x[--p] = -bound;
    if (p == 0) return std::nullopt;
    ++x[p - 1];
  }
}

/// Cofactor-expansion determinant; independent of the Bareiss routine.
inline Integer cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    Integer term = m(0, c) * cofactor_det(minor);
    d += (c % 2 == 0) ? term : Integer(-term);
  }
  return d;
}

/// Intersection pairing written out from the block matrix J.
inline Integer pairing_oracle(const IntVector& x, const IntVector& v) {
  Integer s = 0;
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int jij = 0;
      if (i % 2 == 0 && j == i + 1) jij = 1;
      if (i % 2 == 1 && j + 1 == i) jij = -1;
      s += x[i] * jij * v[j];
    }
  return s;
}

/// A vanishing cycle built from a standard twist along a_i or b_i.
inline VanishingCycle standard_cycle(unsigned genus, GenKind kind, std::uint32_t index, int sign) {
  const GroupCtx ctx = GroupCtx::surface(genus);
  VanishingCycle c;
  c.h1 = zero_vector(2 * genus);
  c.h1[2 * index + (kind == GenKind::b ? 1 : 0)] = 1;
  c.sign = sign;
  c.based_word = Word{kind == GenKind::a ? gen_a(index) : gen_b(index)};
  c.twist_table = standard_twist(ctx, kind, index, sign);
  return c;
}

/// Spec with pi_1 data: k standard cycles, scrambled by `moves` random
/// Hurwitz moves so that words and tables are no longer standard.
inline FibrationSpec random_pi1_spec(Rng& rng, unsigned genus, std::size_t k, unsigned moves) {
  FibrationSpec spec;
  spec.genus = genus;
  for (std::size_t i = 0; i < k; ++i) {
    GenKind kind = uniform(rng, 0, 1) ? GenKind::a : GenKind::b;
    auto index = static_cast<std::uint32_t>(uniform(rng, 0, genus - 1));
    int sign = uniform(rng, 0, 3) == 0 ? -1 : 1;
    spec.cycles.push_back(standard_cycle(genus, kind, index, sign));
  }
  for (unsigned n = 0; n < moves && k >= 2; ++n) {
    auto pos = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(k) - 2));
    spec = hurwitz_move(spec, pos, uniform(rng, 0, 1) ? HurwitzDirection::left : HurwitzDirection::right);
  }
  return spec;
}

/// H_1-only spec with random cycles and mixed signs.
inline FibrationSpec random_h1_spec(Rng& rng, unsigned genus, std::size_t k, long long bound) {
  FibrationSpec spec;
  spec.genus = genus;
  for (std::size_t i = 0; i < k; ++i)
    spec.cycles.push_back({random_vector(rng, 2 * genus, bound), uniform(rng, 0, 1) ? 1 : -1, std::nullopt, std::nullopt});
  return spec;
}

/// Certificate built straight from the defining formula: alpha is the
/// concatenation of zeta_i V_i^{m_i} tau_i^{-1}(zeta_i^{-1}) transported by
/// the prefix inverses.
inline SectionCertificate build_certificate(const FibrationSpec& spec, const std::vector<long long>& m,
                                            const std::vector<Word>& zetas) {
  const GroupCtx ctx = spec.surface();
  std::vector<Generator> letters;
  for (std::size_t i = 0; i < spec.cycles.size(); ++i) {
    const auto& c = spec.cycles[i];
    Word part = concat(concat(zetas[i], power(ctx, *c.based_word, m[i])),
                       apply(inverse(*c.twist_table), invert(zetas[i])));
    for (std::size_t j = i; j-- > 0;) part = apply(inverse(*spec.cycles[j].twist_table), part);
    letters.insert(letters.end(), part.letters().begin(), part.letters().end());
  }
  return {Word(letters), m, zetas};
}

}  // namespace lefsec::testing
