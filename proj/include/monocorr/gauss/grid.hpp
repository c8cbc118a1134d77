#pragma once

#include <string>
#include <vector>

#include "monocorr/audit/report.hpp"
#include "monocorr/gauss/orthant.hpp"

namespace monocorr::gauss {

/// `count` equispaced points from lo to hi inclusive (count == 1 gives lo).
struct GridRange {
  double lo = 0.0;
  double hi = 0.0;
  int count = 1;

  std::vector<double> points() const;
  /// Parses "lo:hi:count".
  static GridRange parse(const std::string& text);
};

struct GammaMin {
  double min = 0.0;
  GaussianPair argmin;
};

struct GridRow {
  GaussianPair at;
  double gamma = 0.0;
  double cov = 0.0;
  double rhs_core = 0.0;
  audit::Ratio ratio;
};

namespace serial {
GammaMin gamma_grid_min(const GridRange& t, const GridRange& s, const GridRange& rho, const QuadratureConfig& cfg = {});
std::vector<GridRow> grid_scan(const GridRange& t, const GridRange& s, const GridRange& rho,
                               const QuadratureConfig& cfg = {});
}  // namespace serial

namespace parallel {
GammaMin gamma_grid_min(const GridRange& t, const GridRange& s, const GridRange& rho, const QuadratureConfig& cfg = {});
std::vector<GridRow> grid_scan(const GridRange& t, const GridRange& s, const GridRange& rho,
                               const QuadratureConfig& cfg = {});
}  // namespace parallel

/// Minimum of gamma_ratio over the grid with the lexicographically first
/// (t, s, rho) among ties. Points are visited t-major, rho-minor.
inline GammaMin gamma_grid_min(const GridRange& t, const GridRange& s, const GridRange& rho,
                               const QuadratureConfig& cfg = {}) {
  return parallel::gamma_grid_min(t, s, rho, cfg);
}

inline std::vector<GridRow> grid_scan(const GridRange& t, const GridRange& s, const GridRange& rho,
                                      const QuadratureConfig& cfg = {}) {
  return parallel::grid_scan(t, s, rho, cfg);
}

/// Indicator covariance, Gaussian KKM bound core and gamma at one point.
GridRow evaluate_point(const GaussianPair& p, const QuadratureConfig& cfg = {});

}  // namespace monocorr::gauss
