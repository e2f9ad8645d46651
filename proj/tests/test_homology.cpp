#include "doctest.h"

#include "lefsec/homology.hpp"
#include "support.hpp"

using namespace lefsec;
using lefsec::testing::Rng;

TEST_CASE("intersection pairing") {
  const IntersectionForm J1(1);
  CHECK(intersection(J1, IntVector{1, 0}, IntVector{0, 1}) == 1);
  CHECK(intersection(J1, IntVector{0, 1}, IntVector{1, 0}) == -1);
  CHECK(intersection(J1, IntVector{3, -2}, IntVector{3, -2}) == 0);
  CHECK_THROWS_AS(intersection(J1, IntVector{1, 0, 0, 0}, IntVector{0, 1}), std::invalid_argument);

  const IntersectionForm J2(2);
  CHECK(J2.matrix().transpose() == IntMatrix(4, 4) - J2.matrix());
  CHECK(determinant(J2.matrix()) == 1);
}

TEST_CASE("transvection examples") {
  const IntersectionForm J1(1);
  CHECK(transvection(J1, IntVector{0, 0}, 1).matrix == IntMatrix::identity(2));
  // <(0,1),(1,0)> = -1, so (0,1) -> (0,1) - (1,0).
  const TwistMatrix t = transvection(J1, IntVector{1, 0}, 1);
  CHECK(t.matrix * IntVector{0, 1} == IntVector{-1, 1});
  CHECK(t.matrix * transvection(J1, IntVector{1, 0}, -1).matrix == IntMatrix::identity(2));
  CHECK_THROWS_AS(transvection(J1, IntVector{1, 0}, 2), std::invalid_argument);
}

TEST_CASE("total_monodromy composes in factorization order") {
  const IntersectionForm J1(1);
  std::vector<TwistMatrix> none;
  CHECK(total_monodromy(none, 2) == IntMatrix::identity(2));
  const TwistMatrix ta = transvection(J1, IntVector{1, 0}, 1);
  const TwistMatrix tb = transvection(J1, IntVector{0, 1}, 1);
  CHECK(total_monodromy(std::vector{ta}) == ta.matrix);
  CHECK(total_monodromy(std::vector{ta, transvection(J1, IntVector{1, 0}, -1)}) == IntMatrix::identity(2));
  // first twist acts first: T_b * T_a
  CHECK(total_monodromy(std::vector{ta, tb}) == tb.matrix * ta.matrix);
  CHECK(tb.matrix * ta.matrix != ta.matrix * tb.matrix);
  const TwistMatrix wrong = transvection(IntersectionForm(2), IntVector{1, 0, 0, 0}, 1);
  CHECK_THROWS_AS(total_monodromy(std::vector{ta, wrong}), std::invalid_argument);
}

TEST_CASE("transvections are symplectic, fix their cycle and match the pairing formula") {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned g = static_cast<unsigned>(lefsec::testing::uniform(rng, 1, 3));
    const IntersectionForm J(g);
    const IntVector v = lefsec::testing::random_vector(rng, 2 * g, 9);
    const int sign = lefsec::testing::uniform(rng, 0, 1) ? 1 : -1;
    const TwistMatrix t = transvection(J, v, sign);
    CHECK(t.matrix.transpose() * J.matrix() * t.matrix == J.matrix());
    CHECK(t.matrix * v == v);
    CHECK(t.matrix * transvection(J, v, -sign).matrix == IntMatrix::identity(2 * g));
    CHECK(transvection(J, Integer(-1) * v, sign).matrix == t.matrix);
    const IntVector x = lefsec::testing::random_vector(rng, 2 * g, 9);
    CHECK(intersection(J, x, v) == lefsec::testing::pairing_oracle(x, v));
    CHECK(t.matrix * x == x + Integer(sign * lefsec::testing::pairing_oracle(x, v)) * v);
  }
}

TEST_CASE("TwistCache returns the transvection") {
  TwistCache cache(2);
  const IntVector v{1, 2, 0, -1};
  const TwistMatrix& a = cache.get(v, 1);
  const TwistMatrix& b = cache.get(v, 1);
  CHECK(&a == &b);
  CHECK(a.matrix == transvection(IntersectionForm(2), v, 1).matrix);
  CHECK(cache.get(v, -1).matrix * a.matrix == IntMatrix::identity(4));
}
