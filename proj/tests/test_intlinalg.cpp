#include "doctest.h"

#include "lefsec/intlinalg.hpp"
#include "support.hpp"

using namespace lefsec;
using lefsec::testing::Rng;

namespace {

bool diagonal_with_chain(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  const std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < n; ++i) {
    if (d(i, i) < 0) return false;
    if (i + 1 < n) {
      if (d(i, i) == 0 && d(i + 1, i + 1) != 0) return false;
      if (d(i, i) != 0 && d(i + 1, i + 1) % d(i, i) != 0) return false;
    }
  }
  return true;
}

void check_snf(const IntMatrix& a) {
  const SmithDecomposition s = smith_normal_form(a);
  CHECK(s.U * a * s.V == s.D);
  CHECK(abs(lefsec::testing::cofactor_det(s.U)) == 1);
  CHECK(abs(lefsec::testing::cofactor_det(s.V)) == 1);
  CHECK(diagonal_with_chain(s.D));
}

}  // namespace

TEST_CASE("smith_normal_form examples") {
  CHECK(smith_normal_form(IntMatrix::identity(2)).D == IntMatrix::identity(2));
  // gcd of entries is 2 and |det| = 8, so the invariant factors are 2 and 4.
  const IntMatrix a{{2, 4}, {6, 8}};
  CHECK(smith_normal_form(a).D == IntMatrix{{2, 0}, {0, 4}});
  check_snf(a);
  CHECK(smith_normal_form(IntMatrix(2, 2)).D == IntMatrix(2, 2));
  check_snf(IntMatrix{{0, 0, 3}, {0, 6, 0}});
  check_snf(IntMatrix{{4}, {6}, {9}});
}

TEST_CASE("smith_normal_form on random square matrices") {
  Rng rng(404);
  for (int trial = 0; trial < 100; ++trial) {
    check_snf(lefsec::testing::random_matrix(rng, 4, 4, 9));
    check_snf(lefsec::testing::random_matrix(rng, 6, 6, 9));
  }
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix low_rank = lefsec::testing::random_matrix(rng, 5, 2, 4) * lefsec::testing::random_matrix(rng, 2, 5, 4);
    check_snf(low_rank);
    CHECK(smith_normal_form(low_rank).rank() <= 2);
  }
}

TEST_CASE("determinant agrees with cofactor expansion") {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m = lefsec::testing::random_matrix(rng, 5, 5, 6);
    if (trial % 5 == 0)
      for (std::size_t j = 0; j < 5; ++j) m(4, j) = m(0, j) * 2 - m(1, j);
    CHECK(determinant(m) == lefsec::testing::cofactor_det(m));
  }
}

TEST_CASE("in_image examples") {
  const IntMatrix two{{2, 0}, {0, 2}};
  CHECK(in_image(two, IntVector{2, 0}) == IntVector{1, 0});
  CHECK_FALSE(in_image(two, IntVector{1, 0}));
  // [[0,0],[-1,0]] has column space Z (0,1): x = (-1,0) hits (0,1).
  const IntMatrix a{{0, 0}, {-1, 0}};
  REQUIRE(lefsec::testing::box_solve(a, IntVector{0, 1}, 3).has_value());
  CHECK(in_image(a, IntVector{0, 1}) == IntVector{-1, 0});
  // Id - T for the genus-1 twist along (1,0) is [[0,1],[0,0]]; the box finds
  // nothing for (0,1).
  const IntMatrix id_minus_t{{0, 1}, {0, 0}};
  REQUIRE_FALSE(lefsec::testing::box_solve(id_minus_t, IntVector{0, 1}, 3).has_value());
  CHECK_FALSE(in_image(id_minus_t, IntVector{0, 1}));
  CHECK_THROWS_AS(in_image(two, IntVector{1, 0, 0}), std::invalid_argument);
}

TEST_CASE("in_image agrees with box enumeration") {
  Rng rng(99);
  int solvable = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(lefsec::testing::uniform(rng, 1, 3));
    const std::size_t cols = static_cast<std::size_t>(lefsec::testing::uniform(rng, 1, 3));
    const IntMatrix a = lefsec::testing::random_matrix(rng, rows, cols, 3);
    IntVector b = lefsec::testing::random_vector(rng, rows, 5);
    if (trial % 2 == 0) b = a * lefsec::testing::random_vector(rng, cols, 3);
    const auto x = in_image(a, b);
    const auto oracle = lefsec::testing::box_solve(a, b, 20);
    if (x) {
      CHECK(a * *x == b);
      ++solvable;
    }
    if (oracle) CHECK(x.has_value());
    if (!x) CHECK_FALSE(oracle.has_value());
  }
  CHECK(solvable > 50);
}

TEST_CASE("cokernel and class equality") {
  const auto triv = cokernel(IntMatrix(2, 2));
  CHECK(triv.rank == 2);
  CHECK(triv.torsion.empty());
  const auto full = cokernel(IntMatrix::identity(2));
  CHECK(full.rank == 0);
  CHECK(full.torsion.empty());
  const auto ck = cokernel(IntMatrix{{2, 0}, {0, 0}});
  CHECK(ck.rank == 1);
  CHECK(ck.torsion == std::vector<Integer>{2});

  CHECK(classes_equal(ck, IntVector{5, 7}, IntVector{5, 7}));
  CHECK(classes_equal(ck, IntVector{1, 0}, IntVector{3, 0}));
  CHECK_FALSE(classes_equal(ck, IntVector{1, 0}, IntVector{0, 0}));
  CHECK_THROWS_AS(classes_equal(ck, IntVector{1}, IntVector{0, 0}), std::invalid_argument);
}

TEST_CASE("classes_equal matches image membership of the difference") {
  Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix a = lefsec::testing::random_matrix(rng, 3, 3, 3);
    const auto ck = cokernel(a);
    const IntVector u = lefsec::testing::random_vector(rng, 3, 6);
    const IntVector v = trial % 2 ? u + a * lefsec::testing::random_vector(rng, 3, 2) : lefsec::testing::random_vector(rng, 3, 6);
    CHECK(classes_equal(ck, u, v) == in_image(a, u - v).has_value());
  }
}

TEST_CASE("unimodular_inverse") {
  const IntMatrix a{{2, 1}, {1, 1}};
  CHECK(unimodular_inverse(a) * a == IntMatrix::identity(2));
  CHECK_THROWS_AS(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), std::invalid_argument);
}
