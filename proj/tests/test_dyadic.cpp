#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cat0/dyadic.hpp"

using cat0::Dyadic;

TEST_CASE("canonical form has odd numerator or zero exponent") {
  Dyadic a(4, 3);  // 4/8 = 1/2
  CHECK(a.numerator() == 1);
  CHECK(a.exponent() == 1);
  CHECK(Dyadic(0, 5) == Dyadic(0));
}

TEST_CASE("arithmetic") {
  Dyadic half(1, 1), quarter(1, 2);
  CHECK(half + quarter == Dyadic(3, 2));
  CHECK(half - quarter == quarter);
  CHECK(half * quarter == Dyadic(1, 3));
  CHECK(quarter < half);
  CHECK(half.scale_pow2(1) == Dyadic(1));
  CHECK(half.scale_pow2(-2) == Dyadic(1, 3));
}

TEST_CASE("parse and print") {
  CHECK(Dyadic::parse("3/2^2") == Dyadic(3, 2));
  CHECK(Dyadic::parse("3/4") == Dyadic(3, 2));
  CHECK(Dyadic::parse("0.75") == Dyadic(3, 2));
  CHECK(Dyadic::parse("-5") == Dyadic(-5));
  CHECK(Dyadic(3, 2).str() == "3/2^2");
  CHECK(Dyadic(7).str() == "7");
  CHECK_THROWS(Dyadic::parse("1/3"));
  CHECK_THROWS(Dyadic::parse("0.1"));
}

TEST_CASE("overflow guarded") {
  Dyadic big(INT64_MAX / 2, 0);
  CHECK_THROWS_AS(big * Dyadic(8), std::overflow_error);
}
