#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "monocorr/error.hpp"
#include "monocorr/gauss/grid.hpp"
#include "monocorr/gauss/normal.hpp"
#include "monocorr/gauss/orthant.hpp"

using namespace monocorr;
using namespace monocorr::gauss;

namespace {

struct Case {
  GaussianPair p;
  double excess;  // mpmath, conditioning integral at 40 digits
  double gamma;
};

const Case kCases[] = {
    {{1.0, -1.0, 0.3}, 0.014854444726020518, 13.530987731798431},
    {{2.0, -3.0, 0.7}, 3.071035602075437e-05, 8.800797924993061},
    {{-1.5, 0.5, 0.95}, 0.020612529446510302, 7.137513021630698},
    {{0.0, 0.0, 0.5}, 0.08333333333333333, 4.188790204786391},
    {{3.0, 3.0, 0.2}, 9.612363915133046e-06, 156.60671802420256},
    {{6.0, 6.0, 0.99}, 6.535624568618223e-10, 3505009426.6610565},
};

}  // namespace

TEST_CASE("Sheppard closed form") {
  CHECK(std::abs(plackett_orthant({0.0, 0.0, 0.5}) - 1.0 / 3.0) <= 1e-12);
  for (int i = 1; i <= 9; ++i) {
    const double rho = i / 10.0;
    CHECK(std::abs(sign_cov({0.0, 0.0, rho}) - 2.0 / std::numbers::pi * std::asin(rho)) <= 1e-12);
  }
}

TEST_CASE("orthant excess and gamma against high-precision values") {
  for (const auto& c : kCases) {
    CAPTURE(c.p.t);
    CAPTURE(c.p.s);
    CAPTURE(c.p.rho);
    CHECK(orthant_excess(c.p) == doctest::Approx(c.excess).epsilon(1e-10));
    CHECK(sign_cov(c.p) == doctest::Approx(4.0 * c.excess).epsilon(1e-10));
    CHECK(gamma_ratio(c.p) == doctest::Approx(c.gamma).epsilon(1e-10));
    CHECK(std::abs(orthant_by_conditioning(c.p) - plackett_orthant(c.p)) <= 1e-12);
  }
}

TEST_CASE("boundary correlations") {
  CHECK(orthant_excess({1.3, -0.4, 0.0}) == 0.0);
  CHECK(gamma_ratio({1.5, -2.0, 0.0}) == doctest::Approx(4.0 * 2.5 * 3.0).epsilon(1e-15));
  CHECK(plackett_orthant({1.0, -1.0, 1.0}) == doctest::Approx(upper_tail(1.0)).epsilon(1e-15));
  CHECK(orthant_excess({0.5, 0.5, 1.0}) == doctest::Approx(upper_tail(0.5) * upper_tail(-0.5)).epsilon(1e-14));
  // The integral form approaches the closed form continuously.
  CHECK(plackett_orthant({1.0, -1.0, 1.0 - 1e-12}) == doctest::Approx(upper_tail(1.0)).epsilon(1e-6));
  CHECK_THROWS_AS(orthant_excess({0.0, 0.0, -0.1}), PreconditionError);
  CHECK_THROWS_AS(orthant_by_conditioning({0.0, 0.0, 1.0}), PreconditionError);
  CHECK_THROWS_AS(gamma_ratio({NAN, 0.0, 0.5}), PreconditionError);
}

TEST_CASE("symmetry and monotonicity in rho") {
  for (double t : {-4.0, -0.5, 0.0, 2.0}) {
    for (double s : {-3.0, 0.7, 5.0}) {
      double previous = 0.0;
      for (int i = 1; i <= 10; ++i) {
        const double rho = i / 10.0;
        const double e = orthant_excess({t, s, rho});
        // Far tails saturate at the product of tails before rho reaches 1.
        CHECK(e >= previous * (1.0 - 1e-9));
        previous = e;
        CHECK(e == doctest::Approx(orthant_excess({s, t, rho})).epsilon(1e-12));
        CHECK(e == doctest::Approx(orthant_excess({-t, -s, rho})).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("integrand floor check") {
  const auto r = lemmaD1_check(2.0, 3.0, 100);
  CHECK(r.pass);
  CHECK(r.min_h <= 1.0);
  CHECK(r.min_h >= std::exp(-1.0));
  CHECK_THROWS_AS(lemmaD1_check(0.5, 2.0, 100), PreconditionError);
}

TEST_CASE("grid ranges") {
  const auto r = GridRange::parse("-8:8:65");
  CHECK(r.points().size() == 65u);
  CHECK(r.points()[32] == 0.0);
  CHECK(r.points().back() == 8.0);
  CHECK(GridRange::parse("0.5:0.5:1").points() == std::vector<double>{0.5});
  CHECK_THROWS_AS(GridRange::parse("0:1"), PreconditionError);
  CHECK_THROWS_AS(GridRange::parse("0:1:0"), PreconditionError);
  CHECK_THROWS_AS(GridRange::parse("a:1:3"), PreconditionError);
}

TEST_CASE("gamma grid minimum") {
  // Gamma(0, 0, rho) = 4 asin(rho) / rho, smallest at the smallest rho.
  const auto m = gamma_grid_min({0, 0, 1}, {0, 0, 1}, {0.1, 1.0, 10});
  CHECK(m.min == doctest::Approx(4.0066968464623915).epsilon(1e-12));
  CHECK(m.argmin.rho == doctest::Approx(0.1));

  const GridRange t{-6, 6, 7}, s{-6, 6, 7}, rho{0.05, 1.0, 6};
  const auto a = serial::gamma_grid_min(t, s, rho);
  const auto b = parallel::gamma_grid_min(t, s, rho);
  CHECK(a.min == b.min);
  CHECK(a.argmin.t == b.argmin.t);
  CHECK(a.argmin.s == b.argmin.s);
  CHECK(a.argmin.rho == b.argmin.rho);

  const auto rows = serial::grid_scan(t, s, rho);
  const auto prows = parallel::grid_scan(t, s, rho);
  REQUIRE(rows.size() == 7u * 7u * 6u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].gamma == prows[i].gamma);
    CHECK(rows[i].cov == prows[i].cov);
  }
  CHECK(rows[1].at.rho > rows[0].at.rho);
  CHECK(rows[6].at.s > rows[0].at.s);
  CHECK_THROWS_AS(gamma_grid_min({0, 0, 1}, {0, 0, 1}, {-0.5, 0.5, 3}), PreconditionError);
}

TEST_CASE("quadrature failures name the grid point") {
  QuadratureConfig starved{1e-300, 1e-300, 1};
  CHECK_THROWS_WITH_AS(gamma_grid_min({3, 3, 1}, {-3, -3, 1}, {0.9, 0.9, 1}, starved), doctest::Contains("t=3"),
                       QuadratureError);
}

TEST_CASE("conditioning route resolves the sharp step at high rho") {
  for (const GaussianPair p : {GaussianPair{-5.0, 5.0, 0.99}, GaussianPair{0.0, 6.0, 0.99}, GaussianPair{2.0, -3.0, 0.999}}) {
    const double via_conditioning = orthant_by_conditioning(p) - upper_tail(p.t) * upper_tail(p.s);
    CHECK(std::abs(via_conditioning - orthant_excess(p)) <= 1e-13);
  }
}
