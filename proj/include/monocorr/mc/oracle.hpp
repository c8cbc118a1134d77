#pragma once

#include <cstdint>

#include "json.hpp"
#include "monocorr/gauss/halfspace.hpp"
#include "monocorr/gauss/orthant.hpp"
#include "monocorr/stieltjes/step.hpp"

namespace monocorr::mc {

/// Sample budget and seeding. Samples are split across `streams`
/// independent generators; stream j is seeded from (seed, j), so the
/// estimate depends only on these three numbers.
struct McConfig {
  std::int64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  int streams = 64;

  void validate() const;
};

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t n = 0;
  std::uint64_t seed = 0;

  /// True iff |mean - value| <= z * std_error.
  bool covers(double value, double z = 4.0) const;
};

nlohmann::json to_json(const Estimate& e);

// Coordinates k are 1-based, as in the CLI.

namespace serial {
Estimate mc_orthant(const gauss::GaussianPair& p, const McConfig& cfg);
Estimate mc_halfspace_influence(const gauss::Halfspace& h, int k, const McConfig& cfg);
Estimate mc_sectional_influence(const gauss::Halfspace& h, int k, const McConfig& cfg);
Estimate mc_general_cov(const stieltjes::MonotoneStep& f, const stieltjes::MonotoneStep& g, double rho,
                        const McConfig& cfg);
}  // namespace serial

namespace parallel {
Estimate mc_orthant(const gauss::GaussianPair& p, const McConfig& cfg);
Estimate mc_halfspace_influence(const gauss::Halfspace& h, int k, const McConfig& cfg);
Estimate mc_sectional_influence(const gauss::Halfspace& h, int k, const McConfig& cfg);
Estimate mc_general_cov(const stieltjes::MonotoneStep& f, const stieltjes::MonotoneStep& g, double rho,
                        const McConfig& cfg);
}  // namespace parallel

/// P(xi > t, eta > s) with eta = rho xi + sqrt(1 - rho^2) G; |rho| <= 1.
inline Estimate mc_orthant(const gauss::GaussianPair& p, const McConfig& cfg) {
  return parallel::mc_orthant(p, cfg);
}

/// E[sgn(<w,x> - t) x_k].
inline Estimate mc_halfspace_influence(const gauss::Halfspace& h, int k, const McConfig& cfg) {
  return parallel::mc_halfspace_influence(h, k, cfg);
}

/// Mean boundary density phi(t_k(x)) of the one-dimensional sections along
/// e_k, with t_k(x) = (t - sum_{j != k} w_j x_j) / w_k. Requires w_k > 0. In
/// dimension 1 there is nothing to sample and phi(t / w_1) is returned with
/// zero error and n = 0.
inline Estimate mc_sectional_influence(const gauss::Halfspace& h, int k, const McConfig& cfg) {
  return parallel::mc_sectional_influence(h, k, cfg);
}

/// Cov(f(Z1), g(Z2)) for a standard normal pair with correlation rho; the
/// error is the delta-method standard error of the sample covariance.
inline Estimate mc_general_cov(const stieltjes::MonotoneStep& f, const stieltjes::MonotoneStep& g, double rho,
                               const McConfig& cfg) {
  return parallel::mc_general_cov(f, g, rho, cfg);
}

}  // namespace monocorr::mc

#include <string>
#include <vector>

namespace monocorr::mc {

struct CalibrationCase {
  std::string label;
  double expected = 0.0;
  Estimate estimate;
  bool covered = false;  // expected inside mean +- 4 std_error
};

/// 50 estimators with closed-form targets: 20 zero-threshold orthants,
/// 15 halfspace influences and 15 sectional influences. Instance i uses
/// seed cfg.seed + i; instance parameters come from cfg.seed alone.
std::vector<CalibrationCase> calibration_suite(const McConfig& cfg);

}  // namespace monocorr::mc
