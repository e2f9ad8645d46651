#include "lefsec/fibration.hpp"

#include <deque>
#include <set>
#include <stdexcept>

namespace lefsec {

bool FibrationSpec::has_pi1_data() const {
  for (const auto& c : cycles)
    if (!c.has_pi1_data()) return false;
  return true;
}

Check validate(const FibrationSpec& spec) {
  if (spec.genus < 1) return Check::fail("genus must be >= 1");
  const IntersectionForm form(spec.genus);
  const GroupCtx ctx = spec.surface();
  for (std::size_t i = 0; i < spec.cycles.size(); ++i) {
    const auto& c = spec.cycles[i];
    const std::string where = "cycle " + std::to_string(i + 1) + ": ";
    if (c.h1.size() != spec.dimension())
      return Check::fail(where + "h1 vector must have length " + std::to_string(spec.dimension()));
    if (c.sign != 1 && c.sign != -1) return Check::fail(where + "sign must be +1 or -1");
    if (c.based_word) {
      if (!ctx.valid(*c.based_word)) return Check::fail(where + "based word uses an out-of-range generator");
      if (abelianize(ctx, *c.based_word) != c.h1)
        return Check::fail(where + "based word does not abelianize to the h1 vector");
    }
    if (c.twist_table) {
      if (!(c.twist_table->ctx() == ctx)) return Check::fail(where + "twist table has the wrong genus");
      if (Check v = verify(*c.twist_table); !v) return Check::fail(where + "twist table: " + v.diagnostic);
      if (h1_shadow(*c.twist_table) != transvection(form, c.h1, c.sign).matrix)
        return Check::fail(where + "twist table does not act on homology as the signed transvection of h1");
    }
  }
  if (spec.claimed_matrix && *spec.claimed_matrix != monodromy(spec))
    return Check::fail("claimed monodromy matrix differs from the product of the twists");
  if (spec.claimed_table) {
    if (!(spec.claimed_table->ctx() == ctx)) return Check::fail("claimed monodromy table has the wrong genus");
    if (Check v = verify(*spec.claimed_table); !v) return Check::fail("claimed monodromy table: " + v.diagnostic);
    if (h1_shadow(*spec.claimed_table) != monodromy(spec))
      return Check::fail("claimed monodromy table differs from the product of the twists on homology");
    bool all_tables = !spec.cycles.empty();
    for (const auto& c : spec.cycles) all_tables = all_tables && c.twist_table.has_value();
    if (all_tables && !same_action(*spec.claimed_table, monodromy_table(spec)))
      return Check::fail("claimed monodromy table differs from the composed twist tables");
  }
  return Check::pass();
}

std::vector<TwistMatrix> twist_matrices(const FibrationSpec& spec) {
  const IntersectionForm form(spec.genus);
  std::vector<TwistMatrix> out;
  out.reserve(spec.cycles.size());
  for (const auto& c : spec.cycles) out.push_back(transvection(form, c.h1, c.sign));
  return out;
}

IntMatrix monodromy(const FibrationSpec& spec) {
  return total_monodromy(twist_matrices(spec), spec.dimension());
}

std::vector<Automorphism> twist_tables(const FibrationSpec& spec) {
  std::vector<Automorphism> out;
  for (std::size_t i = 0; i < spec.cycles.size(); ++i) {
    if (!spec.cycles[i].twist_table)
      throw std::invalid_argument("cycle " + std::to_string(i + 1) + " has no twist table");
    out.push_back(*spec.cycles[i].twist_table);
  }
  return out;
}

Automorphism monodromy_table(const FibrationSpec& spec) {
  return compose_factorization(twist_tables(spec));
}

FibrationSpec hurwitz_move(const FibrationSpec& spec, std::size_t i, HurwitzDirection dir) {
  if (i + 1 >= spec.cycles.size())
    throw std::out_of_range("Hurwitz move position " + std::to_string(i + 1) + " out of range for " +
                            std::to_string(spec.cycles.size()) + " cycles");
  const IntersectionForm form(spec.genus);
  FibrationSpec out = spec;
  const VanishingCycle& first = spec.cycles[i];
  const VanishingCycle& second = spec.cycles[i + 1];

  if (dir == HurwitzDirection::left) {
    // The new second cycle is tau_second(first).
    const TwistMatrix t = transvection(form, second.h1, second.sign);
    VanishingCycle moved{t.matrix * first.h1, first.sign, std::nullopt, std::nullopt};
    if (first.based_word && second.twist_table) moved.based_word = apply(*second.twist_table, *first.based_word);
    if (first.twist_table && second.twist_table)
      moved.twist_table = compose(compose(*second.twist_table, *first.twist_table), inverse(*second.twist_table));
    out.cycles[i] = second;
    out.cycles[i + 1] = std::move(moved);
  } else {
    // The new first cycle is tau_first^{-1}(second).
    const TwistMatrix tinv = transvection(form, first.h1, -first.sign);
    VanishingCycle moved{tinv.matrix * second.h1, second.sign, std::nullopt, std::nullopt};
    if (second.based_word && first.twist_table)
      moved.based_word = apply_power(*first.twist_table, *second.based_word, -1);
    if (second.twist_table && first.twist_table)
      moved.twist_table = compose(compose(inverse(*first.twist_table), *second.twist_table), *first.twist_table);
    out.cycles[i] = std::move(moved);
    out.cycles[i + 1] = first;
  }
  return out;
}

namespace {

std::vector<Integer> orbit_key(const FibrationSpec& spec) {
  std::vector<Integer> key;
  for (const auto& c : spec.cycles) {
    key.insert(key.end(), c.h1.begin(), c.h1.end());
    key.emplace_back(c.sign);
  }
  return key;
}

FibrationSpec h1_only(const FibrationSpec& spec) {
  FibrationSpec out;
  out.genus = spec.genus;
  for (const auto& c : spec.cycles) out.cycles.push_back({c.h1, c.sign, std::nullopt, std::nullopt});
  return out;
}

}  // namespace

std::vector<FibrationSpec> hurwitz_orbit(const FibrationSpec& spec, unsigned depth) {
  std::vector<FibrationSpec> found{h1_only(spec)};
  std::set<std::vector<Integer>> seen{orbit_key(found.front())};
  std::size_t frontier_begin = 0;
  for (unsigned level = 0; level < depth; ++level) {
    const std::size_t frontier_end = found.size();
    for (std::size_t n = frontier_begin; n < frontier_end; ++n) {
      for (std::size_t i = 0; i + 1 < spec.cycles.size(); ++i)
        for (auto dir : {HurwitzDirection::left, HurwitzDirection::right}) {
          FibrationSpec next = hurwitz_move(found[n], i, dir);
          if (seen.insert(orbit_key(next)).second) found.push_back(std::move(next));
        }
    }
    frontier_begin = frontier_end;
    if (frontier_begin == found.size()) break;
  }
  return found;
}

H1Vector section_h1_class(const FibrationSpec& spec, const std::vector<long long>& m) {
  if (m.size() != spec.cycles.size())
    throw std::invalid_argument("section vector length must equal the number of cycles");
  const IntersectionForm form(spec.genus);
  H1Vector total = zero_vector(spec.dimension());
  // prefix_inv = (T_{i-1} ... T_1)^{-1} = T_1^{-1} ... T_{i-1}^{-1}
  IntMatrix prefix_inv = IntMatrix::identity(spec.dimension());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto& c = spec.cycles[i];
    if (c.h1.size() != spec.dimension()) throw std::invalid_argument("cycle length must be 2g");
    total = total + prefix_inv * (Integer(m[i]) * c.h1);
    prefix_inv = prefix_inv * transvection(form, c.h1, -c.sign).matrix;
  }
  return total;
}

CokernelPresentation boundary_cokernel(const FibrationSpec& spec) {
  return cokernel(IntMatrix::identity(spec.dimension()) - monodromy(spec));
}

IntVector double_delta(const FibrationSpec& spec, const std::vector<long long>& m) {
  return boundary_cokernel(spec).coordinates(section_h1_class(spec, m));
}

std::optional<DistinctSectionsWitness> distinct_sections_criterion(const FibrationSpec& spec, long long m_bound) {
  if (m_bound < 1) throw std::invalid_argument("m_bound must be >= 1");
  const SmithDecomposition snf = smith_normal_form(IntMatrix::identity(spec.dimension()) - monodromy(spec));
  for (std::size_t j = 0; j < spec.cycles.size(); ++j)
    for (long long m = 1; m <= m_bound; ++m)
      if (!in_image(snf, Integer(m) * spec.cycles[j].h1)) return DistinctSectionsWitness{j, m};
  return std::nullopt;
}

}  // namespace lefsec
