#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <limits>
#include <sstream>

#include "monocorr/error.hpp"
#include "monocorr/rational.hpp"

using monocorr::Rational;

TEST_CASE("normalises sign and common factors") {
  const Rational a(6, -8);
  CHECK(a.num() == -3);
  CHECK(a.den() == 4);
  CHECK(Rational(0, -5) == Rational(0));
  CHECK(Rational(0, -5).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), monocorr::PreconditionError);
}

TEST_CASE("field operations") {
  const Rational a(1, 6), b(3, 10);
  CHECK(a + b == Rational(7, 15));
  CHECK(a - b == Rational(-2, 15));
  CHECK(a * b == Rational(1, 20));
  CHECK(a / b == Rational(5, 9));
  CHECK(-a == Rational(-1, 6));
  CHECK_THROWS_AS(a / Rational(0), monocorr::PreconditionError);
}

TEST_CASE("ordering uses exact cross products") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  CHECK(Rational(big - 1, big) < Rational(big, big - 1));
  CHECK(Rational(big, 1) > Rational(big - 1, 1));
}

TEST_CASE("formatting") {
  CHECK(Rational(3, 32).to_string() == "3/32");
  CHECK(Rational(4, 2).to_string() == "2");
  std::ostringstream os;
  os << Rational(-7, 4);
  CHECK(os.str() == "-7/4");
  CHECK(Rational(3, 8).to_double() == 0.375);
}

TEST_CASE("overflow is reported, not wrapped") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(Rational(big) * Rational(2), monocorr::OverflowError);
  CHECK_THROWS_AS(Rational(1, big) + Rational(1, big - 1), monocorr::OverflowError);
  CHECK(Rational(big) * Rational(1, big) == Rational(1));
}
