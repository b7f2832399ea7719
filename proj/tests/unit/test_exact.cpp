#include "doctest.h"

#include "capric/errors.hpp"
#include "capric/exact.hpp"

using namespace capric;

TEST_CASE("decimal literals become the rationals they denote") {
  CHECK(decimal_to_rational("0.3") == Rational(3) / 10);
  CHECK(decimal_to_rational("-1.25e-2") == Rational(-1) / 80);
  CHECK(decimal_to_rational("2") == Rational(2));
  CHECK(decimal_to_rational("+0.50") == Rational(1) / 2);
  CHECK(decimal_to_rational("1e3") == Rational(1000));
  CHECK(decimal_to_rational(".5") == Rational(1) / 2);
  CHECK(decimal_to_rational("0.1") + decimal_to_rational("0.2") ==
        decimal_to_rational("0.3"));
}

TEST_CASE("malformed literals are rejected") {
  CHECK_THROWS_AS(decimal_to_rational(""), input_error);
  CHECK_THROWS_AS(decimal_to_rational("abc"), input_error);
  CHECK_THROWS_AS(decimal_to_rational("1.2.3"), input_error);
  CHECK_THROWS_AS(decimal_to_rational("1e"), input_error);
  CHECK_THROWS_AS(decimal_to_rational("."), input_error);
  CHECK_THROWS_AS(decimal_to_rational("1e99999"), input_error);
}

TEST_CASE("doubles convert at their exact dyadic value") {
  CHECK(dyadic_of(0.5) == Rational(1) / 2);
  CHECK(dyadic_of(-0.75) == Rational(-3) / 4);
  CHECK(dyadic_of(3.0) == Rational(3));
  CHECK(dyadic_of(0.0) == Rational(0));
  // 0.3 the double is not 3/10 the rational; the difference is the whole
  // point of accepting decimal strings
  CHECK(dyadic_of(0.3) != Rational(3) / 10);
}

TEST_CASE("round trip through double") {
  CHECK(to_double(Rational(1) / 2) == 0.5);
  CHECK(to_double(decimal_to_rational("0.3")) == 0.3);
}
