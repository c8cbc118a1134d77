#include <cmath>
#include <numbers>

#include "monocorr/gauss/normal.hpp"
#include "monocorr/mc/oracle.hpp"
#include "monocorr/random.hpp"

namespace monocorr::mc {

namespace {

std::vector<double> random_direction(std::mt19937_64& eng, int dim) {
  std::vector<double> w(static_cast<std::size_t>(dim));
  for (double& x : w) x = gauss::quantile(uniform_open(eng));
  return w;
}

}  // namespace

std::vector<CalibrationCase> calibration_suite(const McConfig& cfg) {
  cfg.validate();
  auto eng = make_engine(cfg.seed, 0xCA11B);
  std::vector<CalibrationCase> out;
  auto run = [&](std::string label, double expected, auto estimator) {
    McConfig c = cfg;
    c.seed = cfg.seed + out.size();
    CalibrationCase cc{std::move(label), expected, estimator(c), false};
    cc.covered = cc.estimate.covers(expected);
    out.push_back(std::move(cc));
  };

  for (int i = 0; i < 20; ++i) {
    const double rho = -0.95 + 1.9 * i / 19.0;
    const gauss::GaussianPair p{0.0, 0.0, rho};
    run("orthant(rho=" + std::to_string(rho) + ")", 0.25 + std::asin(rho) / (2.0 * std::numbers::pi),
        [&](const McConfig& c) { return mc_orthant(p, c); });
  }
  for (int i = 0; i < 15; ++i) {
    const int dim = static_cast<int>(uniform_int(eng, 1, 6));
    const gauss::Halfspace h(random_direction(eng, dim), uniform_between(eng, -2.0, 2.0));
    const int k = static_cast<int>(uniform_int(eng, 1, dim));
    run("halfspace_influence#" + std::to_string(i), 2.0 * gauss::pdf(h.t()) * h.w()[k - 1],
        [&](const McConfig& c) { return mc_halfspace_influence(h, k, c); });
  }
  for (int i = 0; i < 15; ++i) {
    const int dim = static_cast<int>(uniform_int(eng, 2, 6));
    auto w = random_direction(eng, dim);
    const int k = static_cast<int>(uniform_int(eng, 1, dim));
    w[static_cast<std::size_t>(k - 1)] = std::abs(w[static_cast<std::size_t>(k - 1)]);
    const gauss::Halfspace h(std::move(w), uniform_between(eng, -2.0, 2.0));
    run("sectional_influence#" + std::to_string(i), gauss::pdf(h.t()) * h.w()[k - 1],
        [&](const McConfig& c) { return mc_sectional_influence(h, k, c); });
  }
  return out;
}

}  // namespace monocorr::mc
