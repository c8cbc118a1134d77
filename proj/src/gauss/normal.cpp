#include "monocorr/gauss/normal.hpp"

#include <boost/math/policies/policy.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <cmath>
#include <numbers>

#include "monocorr/error.hpp"

namespace monocorr::gauss {

namespace {

using FastPolicy = boost::math::policies::policy<boost::math::policies::promote_double<false>>;

// Mills ratio P(Z > t) / phi(t) by the Laplace continued fraction
// 1 / (t + 1/(t + 2/(t + 3/(t + ...)))), evaluated with modified Lentz.
double mills_ratio(double t) {
  constexpr double tiny = 1e-300;
  double f = t;
  double c = t;
  double d = 0.0;
  for (int k = 1; k < 500; ++k) {
    d = t + k * d;
    if (d == 0.0) d = tiny;
    c = t + k / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return 1.0 / f;
}

void require_open_correlation(double r) {
  if (!(std::abs(r) < 1.0)) throw PreconditionError("correlation must satisfy |r| < 1");
}

}  // namespace

double pdf(double t) { return kInvSqrt2Pi * std::exp(-0.5 * t * t); }

double log_pdf(double t) { return -0.5 * t * t - kLogSqrt2Pi; }

double upper_tail(double t) { return 0.5 * std::erfc(t / std::numbers::sqrt2); }

double log_upper_tail(double t) {
  if (t < 30.0) return std::log(upper_tail(t));
  return log_pdf(t) + std::log(mills_ratio(t));
}

double bivariate_density(double r, double t, double s) {
  require_open_correlation(r);
  const double one_minus_r2 = (1.0 - r) * (1.0 + r);
  const double q = (t * t + s * s - 2.0 * r * t * s) / (2.0 * one_minus_r2);
  return std::exp(-q) / (2.0 * std::numbers::pi * std::sqrt(one_minus_r2));
}

double h_integrand(double r, double t, double s) {
  require_open_correlation(r);
  const double one_minus_r2 = (1.0 - r) * (1.0 + r);
  const double e = (r * t * s - 0.5 * (t * t + s * s) * r * r) / one_minus_r2;
  return std::exp(e) / std::sqrt(one_minus_r2);
}

double quantile(double u) {
  if (!(u > 0.0 && u < 1.0)) throw PreconditionError("quantile argument must lie in (0, 1)");
  return -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * u, FastPolicy());
}

}  // namespace monocorr::gauss
