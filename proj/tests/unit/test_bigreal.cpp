#include "doctest.h"
#include "hypergerm/bigreal.hpp"
#include "hypergerm/errors.hpp"

using namespace hypergerm;

TEST_SUITE_BEGIN("bigreal");

TEST_CASE("working precision defaults and clamping") {
  set_working_precision(kDefaultPrecision);
  CHECK(working_precision() == 60);
  {
    PrecisionGuard g(100);
    CHECK(working_precision() == 100);
  }
  CHECK(working_precision() == 60);
  {
    PrecisionGuard g(10);  // below the floor, clamped
    CHECK(working_precision() == kMinPrecision);
  }
  CHECK(working_precision() == 60);
}

TEST_CASE("decimal literals parse exactly and round-trip") {
  set_working_precision(60);
  BigReal a = bigreal_from_decimal("0.25");
  CHECK(a == BigReal(1) / 4);
  BigReal b = bigreal_from_decimal("1e-9");
  CHECK(b == BigReal(1) / 1000000000);
  BigReal c = bigreal_from_decimal("-12.5");
  CHECK(c == BigReal(-25) / 2);
  CHECK(bigreal_from_decimal(decimal_string(c)) == c);

  CHECK_THROWS_AS(bigreal_from_decimal("0x10"), DomainError);
  CHECK_THROWS_AS(bigreal_from_decimal(".5"), DomainError);
  CHECK_THROWS_AS(bigreal_from_decimal("nan"), DomainError);
  CHECK_THROWS_AS(bigreal_from_decimal("1.2.3"), DomainError);
}

TEST_CASE("binary-to-rational conversion is exact") {
  set_working_precision(60);
  BigReal x = bigreal_from_decimal("0.1");  // not a binary fraction
  Rational r = rational_from_bigreal(x);
  CHECK(bigreal_from_rational(r) == x);

  BigReal q = bigreal_from_decimal("3.25");
  CHECK(rational_from_bigreal(q) == Rational(13, 4));
}

TEST_CASE("rational rendering") {
  CHECK(rational_string(Rational(3)) == "3");
  CHECK(rational_string(Rational(-3)) == "-3");
  CHECK(rational_string(Rational(1, 4)) == "0.25");
  CHECK(rational_string(Rational(-1, 8)) == "-0.125");
  CHECK(rational_string(Rational(1, 3)) == "1/3");
  CHECK(rational_string(Rational(7, 10)) == "0.7");
  CHECK(rational_string(Rational(1001, 10)) == "100.1");
  CHECK(has_finite_decimal(Rational(1, 40)));
  CHECK(!has_finite_decimal(Rational(1, 6)));
}

TEST_CASE("constants match frozen references") {
  set_working_precision(60);
  // First 50 digits, computed independently.
  BigReal pi_ref = bigreal_from_decimal(
      "3.1415926535897932384626433832795028841971693993751");
  BigReal e_ref = bigreal_from_decimal(
      "2.7182818284590452353602874713526624977572470936999");
  CHECK(abs(const_pi() - pi_ref) < BigReal("1e-49"));
  CHECK(abs(const_e() - e_ref) < BigReal("1e-49"));
}

TEST_SUITE_END();
