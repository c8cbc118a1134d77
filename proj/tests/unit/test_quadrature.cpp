#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "monocorr/error.hpp"
#include "monocorr/gauss/quadrature.hpp"

using namespace monocorr;
using namespace monocorr::gauss;

TEST_CASE("closed-form integrals") {
  CHECK(integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi).value ==
        doctest::Approx(2.0).epsilon(1e-13));
  CHECK(integrate([](double x) { return std::exp(-x * x); }, -10.0, 10.0).value ==
        doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
  const auto peak = integrate([](double x) { return 1.0 / (1e-4 + x * x); }, -1.0, 1.0);
  CHECK(peak.value == doctest::Approx(312.15933202164626).epsilon(1e-10));
  CHECK(peak.subdivisions > 1);
  CHECK(integrate([](double) { return 3.0; }, 2.0, 2.0).value == 0.0);
  CHECK(integrate([](double x) { return x; }, 1.0, 0.0).value == doctest::Approx(-0.5).epsilon(1e-15));
}

TEST_CASE("agrees with an independent Gauss-Kronrod implementation") {
  using boost::math::quadrature::gauss_kronrod;
  auto f = [](double x) { return std::exp(-0.5 * x * x) * std::cos(3.0 * x) / (1.0 + x * x); };
  const double ours = integrate(f, -8.0, 8.0).value;
  const double ref = gauss_kronrod<double, 31>::integrate(f, -8.0, 8.0, 30, 1e-14);
  CHECK(ours == doctest::Approx(ref).epsilon(1e-11));
}

TEST_CASE("error estimate and failure") {
  QuadratureConfig tight{1e-15, 1e-15, 1};
  try {
    integrate([](double x) { return 1.0 / (1e-6 + x * x); }, -1.0, 1.0, tight);
    FAIL("expected a quadrature error");
  } catch (const QuadratureError& e) {
    CHECK(e.achieved_error() > 1e-15);
  }
  const auto r = integrate([](double x) { return std::exp(x); }, 0.0, 1.0);
  CHECK(r.abs_error <= 1e-10 * r.value);
  CHECK(std::abs(r.value - (std::exp(1.0) - 1.0)) <= 1e-13);
}

TEST_CASE("configuration validation") {
  CHECK_THROWS_AS((QuadratureConfig{0.0, 1e-10, 200}.validate()), PreconditionError);
  CHECK_THROWS_AS((QuadratureConfig{1e-12, -1.0, 200}.validate()), PreconditionError);
  CHECK_THROWS_AS((QuadratureConfig{1e-12, 1e-10, 0}.validate()), PreconditionError);
  CHECK_NOTHROW(QuadratureConfig{}.validate());
}
