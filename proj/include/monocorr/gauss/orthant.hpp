#pragma once

#include "monocorr/gauss/quadrature.hpp"

namespace monocorr::gauss {

/// Thresholds (t, s) and correlation rho of a standard normal pair (xi, eta).
struct GaussianPair {
  double t = 0.0;
  double s = 0.0;
  double rho = 0.0;

  /// Throws PreconditionError unless t, s are finite and |rho| <= 1.
  void validate() const;
};

/// Integral of h_r(t,s) over r in [0, rho], rho in [0, 1].
///
/// Evaluated in the angle variable r = sin(theta), where the integrand
/// exp(-r^2 (t-s)^2 / (2 cos^2 theta) + t s r / (1 + r)) is smooth up to
/// theta = pi/2.
double normalized_plackett_integral(const GaussianPair& p, const QuadratureConfig& cfg = {});

/// P(xi > t, eta > s) - P(xi > t) P(eta > s), rho in [0, 1].
double orthant_excess(const GaussianPair& p, const QuadratureConfig& cfg = {});

/// P(xi > t, eta > s) by the Plackett integral; rho in [0, 1], closed form at 1.
double plackett_orthant(const GaussianPair& p, const QuadratureConfig& cfg = {});

/// Cov(sgn(xi - t), sgn(eta - s)) = 4 * integral of phi_r(t,s) over [0, rho].
double sign_cov(const GaussianPair& p, const QuadratureConfig& cfg = {});

/// P(xi > t, eta > s) by conditioning on xi: integral over x > t of
/// phi(x) P(Z > (s - rho x) / sqrt(1 - rho^2)). Independent of the Plackett
/// route; rho in [0, 1).
double orthant_by_conditioning(const GaussianPair& p, const QuadratureConfig& cfg = {});

/// 4 (1+|t|)(1+|s|) / rho * integral of h_r over [0, rho]; the rho -> 0 limit
/// 4 (1+|t|)(1+|s|) at rho = 0.
double gamma_ratio(const GaussianPair& p, const QuadratureConfig& cfg = {});

struct LemmaD1Result {
  double min_h = 0.0;
  bool pass = false;
};

/// Minimum of h_r(t, -k) over `samples` equispaced r in [0, 1/(2tk)];
/// passes iff that minimum is >= 1/e - 1e-12. Requires t, k >= 1.
LemmaD1Result lemmaD1_check(double t, double k, int samples);

}  // namespace monocorr::gauss
