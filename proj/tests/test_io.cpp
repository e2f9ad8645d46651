#include "doctest.h"

#include "lefsec/io.hpp"
#include "support.hpp"

using namespace lefsec;
using nlohmann::json;

TEST_CASE("integers survive beyond 64 bits") {
  const Integer big = Integer(1) << 100;
  CHECK(io::integer_from_json(io::to_json(big), "x") == big);
  CHECK(io::integer_from_json(json(-7), "x") == -7);
  CHECK(io::integer_from_json(json("-1267650600228229401496703205376"), "x") == -big);
  CHECK_THROWS_AS(io::integer_from_json(json("12a"), "x"), io::SchemaError);
  CHECK_THROWS_AS(io::integer_from_json(json(1.5), "x"), io::SchemaError);
}

TEST_CASE("fibration specs round-trip") {
  lefsec::testing::Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    FibrationSpec s = lefsec::testing::random_pi1_spec(rng, 2, 3, 3);
    s.claimed_matrix = monodromy(s);
    const FibrationSpec back = io::fibration_from_json(io::to_json(s));
    CHECK(io::to_json(back) == io::to_json(s));
    CHECK(validate(back));
  }
}

TEST_CASE("certificates round-trip and reject bad input") {
  const SectionCertificate c{parse_word("a1 b1^-1"), {2, -1}, {Word{}, parse_word("b2")}};
  CHECK(io::certificate_from_json(io::to_json(c)) == c);
  CHECK_THROWS_AS(io::certificate_from_json(json{{"alpha", "a1"}, {"m", json::array({1})}}), io::SchemaError);
  CHECK_THROWS_AS(io::certificate_from_json(json{{"alpha", "q"}, {"m", json::array({1})}, {"zetas", json::array({"e"})}}),
                  ParseError);
}

TEST_CASE("fibration schema errors") {
  CHECK_THROWS_AS(io::fibration_from_json(json::array()), io::SchemaError);
  CHECK_THROWS_AS(io::fibration_from_json(json{{"genus", 0}, {"cycles", json::array()}}), io::SchemaError);
  CHECK_THROWS_AS(io::fibration_from_json(json::parse(R"({"genus":1,"cycles":[{"h1":[1],"sign":1}]})")),
                  io::SchemaError);
}
