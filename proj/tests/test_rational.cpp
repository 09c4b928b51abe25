#include <doctest.h>

#include "fairdiv/errors.hpp"
#include "fairdiv/rational.hpp"
#include "fairdiv/rng.hpp"

using namespace fairdiv;

TEST_CASE("parsing canonicalizes to lowest terms with positive denominator") {
  CHECK(to_string(parse_rational("14/21")) == "2/3");
  CHECK(parse_rational("14/21") == parse_rational("2/3"));
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("7/1")) == "7");
  CHECK(to_string(parse_rational("0/5")) == "0");
  CHECK(to_string(parse_rational("42")) == "42");
}

TEST_CASE("decimal literals parse exactly") {
  CHECK(parse_rational("0.25") == parse_rational("1/4"));
  CHECK(parse_rational("-1.5") == parse_rational("-3/2"));
  CHECK(parse_rational("-0.125") == parse_rational("-1/8"));
  CHECK(parse_rational(".5") == parse_rational("1/2"));
}

TEST_CASE("malformed rationals are rejected") {
  CHECK_THROWS_AS(parse_rational("1/-2"), Error);  // denominators are positive
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("a/b"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("1.2.3"), Error);
}

TEST_CASE("print/parse round-trips on random rationals") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    long num = static_cast<long>(rng.below(4001)) - 2000;
    long den = static_cast<long>(rng.below(999)) + 1;
    Rational q = Rational(num) / Rational(den);
    CHECK(parse_rational(to_string(q)) == q);
    CHECK(denominator(q) >= 1);
  }
}

TEST_CASE("arithmetic stays exact where doubles would not") {
  Rational third = Rational(1) / 3;
  CHECK(third + third + third == 1);
  CHECK(Rational(1) / 10 + Rational(2) / 10 == Rational(3) / 10);
}

TEST_CASE("floor_div matches floor semantics on negatives") {
  CHECK(floor_div(parse_rational("7/2")) == 3);
  CHECK(floor_div(parse_rational("-7/2")) == -4);
  CHECK(floor_div(parse_rational("3")) == 3);
  CHECK(floor_div(parse_rational("2/3")) == 0);
  CHECK(floor_div(parse_rational("-1/3")) == -1);
}
