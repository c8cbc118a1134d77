#pragma once

#include <span>
#include <utility>
#include <vector>

#include "monocorr/audit/report.hpp"
#include "monocorr/gauss/quadrature.hpp"

namespace monocorr::stieltjes {

/// Non-decreasing left-continuous step function into [0, 1]:
/// f(x) = base + sum of jumps[j] over breakpoints[j] < x.
///
/// Its Lebesgue-Stieltjes measure is the atomic sum of jumps[j] at
/// breakpoints[j].
class MonotoneStep {
public:
  double base() const noexcept { return base_; }
  std::span<const double> breakpoints() const noexcept { return breakpoints_; }
  std::span<const double> jumps() const noexcept { return jumps_; }
  std::size_t atoms() const noexcept { return jumps_.size(); }

  double operator()(double x) const;

  /// Same breakpoints with every jump multiplied by alpha in (0, 1].
  MonotoneStep scaled(double alpha) const;

private:
  friend MonotoneStep make_step(double base, std::span<const std::pair<double, double>> points);
  double base_ = 0.0;
  std::vector<double> breakpoints_;
  std::vector<double> jumps_;
};

/// Validates and builds a step function from (t_j, delta_j) pairs.
/// Throws PreconditionError for non-increasing breakpoints, non-positive
/// jumps, negative base, or base + sum of jumps above 1.
MonotoneStep make_step(double base, std::span<const std::pair<double, double>> points);

struct StieltjesMoments {
  double mass = 0.0;  // m_f
  double a = 0.0;     // sum of delta_j phi(t_j)
  double b = 0.0;     // sum of delta_j (1 + |t_j|) phi(t_j)
};

StieltjesMoments moments(const MonotoneStep& f);

/// sum of delta_j phi(t_j) / (1 + |t_j|).
double attenuated_moment(const MonotoneStep& f);

/// E[f(Z) Z] by piecewise quadrature against the normal density.
double a_via_expectation(const MonotoneStep& f, const gauss::QuadratureConfig& cfg = {});

struct Lemma52Result {
  double lhs = 0.0;               // b_f
  double rhs = 0.0;               // 2 a_f sqrt(log(e / a_f^2))
  double intermediate_rhs = 0.0;  // a_f (1 + sqrt(2 log(m_f / (sqrt(2 pi) a_f))))
  bool pass = false;              // final form
  bool intermediate_pass = false;
};

Lemma52Result lemma52_check(const MonotoneStep& f);

namespace serial {
double general_cov(const MonotoneStep& f, const MonotoneStep& g, double rho, const gauss::QuadratureConfig& cfg = {});
}
namespace parallel {
double general_cov(const MonotoneStep& f, const MonotoneStep& g, double rho, const gauss::QuadratureConfig& cfg = {});
}

/// Cov(f(Z1), g(Z2)) for standard normals with correlation rho in [0, 1],
/// as the double atom sum of orthant excesses (summed in (j, l) order).
inline double general_cov(const MonotoneStep& f, const MonotoneStep& g, double rho,
                          const gauss::QuadratureConfig& cfg = {}) {
  return parallel::general_cov(f, g, rho, cfg);
}

/// Gaussian KKM-type audit for F = f(<w,x>), G = g(<v,x>).
/// Extra columns: a_f, a_g, rho.
audit::AuditReport theorem3_report(const MonotoneStep& f, const MonotoneStep& g, std::span<const double> w,
                                   std::span<const double> v, const gauss::QuadratureConfig& cfg = {},
                                   std::string label = {});

}  // namespace monocorr::stieltjes
