#pragma once

#include <span>
#include <vector>

#include "monocorr/audit/report.hpp"
#include "monocorr/gauss/quadrature.hpp"

namespace monocorr::gauss {

/// {x : <w, x> > t} with w renormalized to unit length on construction.
class Halfspace {
public:
  Halfspace(std::vector<double> w, double t);

  std::span<const double> w() const noexcept { return w_; }
  double t() const noexcept { return t_; }
  std::size_t dim() const noexcept { return w_.size(); }

private:
  std::vector<double> w_;
  double t_;
};

/// <a, b> for equal-length vectors, clamped to [-1, 1] for unit inputs.
double correlation(std::span<const double> a, std::span<const double> b);

struct HalfspaceInfluences {
  std::vector<double> signed_influence;     // E[sgn(<w,x> - t) x_k] = 2 phi(t) w_k
  std::vector<double> indicator_influence;  // E[1_H x_k] = phi(t) w_k
};

HalfspaceInfluences halfspace_influences(const Halfspace& h);

/// Gaussian KKM-type audit of two halfspaces in the indicator convention.
/// Extra columns: rho, w1_ab, w1_aa, w1_bb. Rejects rho < 0.
audit::AuditReport ltf_pair_report(const Halfspace& a, const Halfspace& b, const QuadratureConfig& cfg = {},
                                   std::string label = {});

/// Tightness example {<w,x> > t} vs {<w,x> > -t}, t >= 1.
///
/// cov = P(Z > t)^2 and rhs_core = phi(t)^2 / (t^2 + 1) as in the
/// simplified chain; the unsimplified log(e / phi(t)^2) variant goes to the
/// extra columns rhs_core_exact and ratio_exact.
audit::AuditReport proposition1_report(double t, const QuadratureConfig& cfg = {});

}  // namespace monocorr::gauss
