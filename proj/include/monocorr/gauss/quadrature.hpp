#pragma once

#include <functional>

namespace monocorr::gauss {

struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 200;

  /// Throws PreconditionError unless both tolerances are positive and
  /// max_subdivisions >= 1.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  int subdivisions = 0;
};

/// Globally adaptive 7/15-point Gauss-Kronrod integration of f over [a, b].
///
/// The interval with the largest error estimate is bisected until the
/// summed estimate falls below max(abs_tol, rel_tol * |value|). Throws
/// QuadratureError carrying the achieved error when max_subdivisions is
/// exhausted first.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& cfg = {});

}  // namespace monocorr::gauss
