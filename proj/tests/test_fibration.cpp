#include "doctest.h"

#include "lefsec/fibration.hpp"
#include "support.hpp"

using namespace lefsec;
using lefsec::testing::Rng;
using lefsec::testing::standard_cycle;

namespace {
FibrationSpec h1_spec(unsigned genus, std::vector<std::pair<IntVector, int>> cycles) {
  FibrationSpec s;
  s.genus = genus;
  for (auto& [v, sign] : cycles) s.cycles.push_back({v, sign, std::nullopt, std::nullopt});
  return s;
}

bool same_h1(const FibrationSpec& a, const FibrationSpec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.cycles[i].h1 != b.cycles[i].h1 || a.cycles[i].sign != b.cycles[i].sign) return false;
  return true;
}

const IntersectionForm J1(1);
}  // namespace

TEST_CASE("validate") {
  FibrationSpec ok;
  ok.genus = 1;
  ok.cycles = {standard_cycle(1, GenKind::a, 0, 1), standard_cycle(1, GenKind::b, 0, 1)};
  CHECK(validate(ok));
  CHECK(ok.has_pi1_data());

  FibrationSpec bad_len = h1_spec(1, {{IntVector{1, 0, 0}, 1}});
  CHECK_FALSE(validate(bad_len));
  FibrationSpec bad_sign = h1_spec(1, {{IntVector{1, 0}, 2}});
  CHECK_FALSE(validate(bad_sign));

  FibrationSpec bad_word = ok;
  bad_word.cycles[0].based_word = parse_word("b1");
  CHECK_FALSE(validate(bad_word));

  FibrationSpec bad_table = ok;
  bad_table.cycles[0].twist_table = standard_twist(GroupCtx::surface(1), GenKind::a, 0, -1);
  CHECK_FALSE(validate(bad_table));

  FibrationSpec claimed = ok;
  claimed.claimed_matrix = monodromy(ok);
  CHECK(validate(claimed));
  claimed.claimed_matrix = IntMatrix::identity(2);
  CHECK_FALSE(validate(claimed));
}

TEST_CASE("hurwitz_move examples") {
  const FibrationSpec s = h1_spec(1, {{IntVector{1, 0}, 1}, {IntVector{0, 1}, 1}});
  const FibrationSpec l = hurwitz_move(s, 0, HurwitzDirection::left);
  CHECK(l.cycles[0].h1 == IntVector{0, 1});
  CHECK(l.cycles[1].h1 == transvection(J1, IntVector{0, 1}, 1).matrix * IntVector{1, 0});
  CHECK(same_h1(hurwitz_move(l, 0, HurwitzDirection::right), s));
  CHECK(monodromy(l) == monodromy(s));

  const FibrationSpec same = h1_spec(1, {{IntVector{1, 0}, 1}, {IntVector{1, 0}, 1}});
  CHECK(same_h1(hurwitz_move(same, 0, HurwitzDirection::left), same));
  CHECK_THROWS_AS(hurwitz_move(s, 1, HurwitzDirection::left), std::out_of_range);
}

TEST_CASE("hurwitz_move carries pi_1 data consistently") {
  Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const FibrationSpec s = lefsec::testing::random_pi1_spec(rng, 2, 3, 4);
    CHECK(validate(s));
    const auto dir = trial % 2 ? HurwitzDirection::left : HurwitzDirection::right;
    const FibrationSpec t = hurwitz_move(s, static_cast<std::size_t>(trial % 2), dir);
    CHECK(validate(t));
    CHECK(same_action(monodromy_table(t), monodromy_table(s)));
  }
}

TEST_CASE("hurwitz_orbit examples") {
  const FibrationSpec s = h1_spec(1, {{IntVector{1, 0}, 1}, {IntVector{0, 1}, 1}});
  CHECK(hurwitz_orbit(s, 0).size() == 1);
  CHECK(hurwitz_orbit(h1_spec(1, {{IntVector{1, 0}, 1}}), 3).size() == 1);
  // left gives ((0,1),(1,1)), right gives ((1,1),(1,0)); both new
  const auto orbit = hurwitz_orbit(s, 1);
  CHECK(orbit.size() == 3);
  CHECK(same_h1(orbit.front(), s));
  for (const auto& o : hurwitz_orbit(s, 3)) CHECK(monodromy(o) == monodromy(s));
}

TEST_CASE("left and right moves are mutually inverse") {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = static_cast<std::size_t>(lefsec::testing::uniform(rng, 2, 5));
    const FibrationSpec s = lefsec::testing::random_h1_spec(rng, 2, k, 2);
    const std::size_t i = static_cast<std::size_t>(lefsec::testing::uniform(rng, 0, static_cast<long long>(k) - 2));
    CHECK(same_h1(hurwitz_move(hurwitz_move(s, i, HurwitzDirection::left), i, HurwitzDirection::right), s));
    CHECK(same_h1(hurwitz_move(hurwitz_move(s, i, HurwitzDirection::right), i, HurwitzDirection::left), s));
  }
}

TEST_CASE("section classes and the boundary map") {
  const FibrationSpec s = h1_spec(1, {{IntVector{1, 0}, 1}, {IntVector{0, 1}, 1}});
  CHECK(section_h1_class(s, {0, 0}) == IntVector{0, 0});
  CHECK(section_h1_class(s, {1, 0}) == IntVector{1, 0});
  const IntMatrix t1 = transvection(J1, IntVector{1, 0}, 1).matrix;
  CHECK(section_h1_class(s, {0, 1}) == unimodular_inverse(t1) * IntVector{0, 1});

  const FibrationSpec triv = h1_spec(1, {{IntVector{1, 0}, 1}, {IntVector{1, 0}, -1}});
  CHECK(monodromy(triv) == IntMatrix::identity(2));
  CHECK(is_zero(double_delta(triv, {0, 0})));
  std::vector<IntVector> seen;
  for (long long m = 0; m <= 10; ++m) {
    const IntVector d = double_delta(triv, {m, 0});
    for (const auto& e : seen) CHECK(d != e);
    seen.push_back(d);
  }
  const auto ck = boundary_cokernel(triv);
  CHECK(classes_equal(ck, section_h1_class(triv, {3, 0}), IntVector{3, 0}));
}

TEST_CASE("distinct_sections_criterion") {
  const FibrationSpec triv = h1_spec(1, {{IntVector{1, 0}, 1}, {IntVector{1, 0}, -1}});
  CHECK(distinct_sections_criterion(triv) == DistinctSectionsWitness{0, 1});
  CHECK_FALSE(distinct_sections_criterion(h1_spec(1, {{IntVector{1, 0}, 1}}), 20));
  const FibrationSpec doubled = h1_spec(1, {{IntVector{1, 0}, 1}, {IntVector{1, 0}, 1}});
  CHECK(distinct_sections_criterion(doubled) == DistinctSectionsWitness{0, 1});
  const auto ck = boundary_cokernel(doubled);
  CHECK(ck.rank == 1);
  CHECK(ck.torsion == std::vector<Integer>{2});
  CHECK(double_delta(doubled, {0, 0}) != double_delta(doubled, {1, 0}));
}

TEST_CASE("criterion agrees with in_image on random specs") {
  Rng rng(14);
  for (int trial = 0; trial < 60; ++trial) {
    const FibrationSpec s = lefsec::testing::random_h1_spec(rng, 1 + trial % 2, 2, 2);
    const IntMatrix a = IntMatrix::identity(s.dimension()) - monodromy(s);
    const auto w = distinct_sections_criterion(s, 1);
    bool any = false;
    for (const auto& c : s.cycles) any = any || !in_image(a, c.h1);
    CHECK(w.has_value() == any);
  }
}
