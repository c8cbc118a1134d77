#include "monocorr/mc/oracle.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "monocorr/error.hpp"
#include "monocorr/gauss/normal.hpp"
#include "monocorr/random.hpp"

namespace monocorr::mc {

namespace {

double normal(std::mt19937_64& eng) { return gauss::quantile(uniform_open(eng)); }

/// Running sums of x and x^2.
struct Moments {
  double sum = 0.0;
  double sumsq = 0.0;
  std::int64_t count = 0;

  void add(double x) {
    sum += x;
    sumsq += x * x;
    ++count;
  }
  void merge(const Moments& o) {
    sum += o.sum;
    sumsq += o.sumsq;
    count += o.count;
  }
};

/// Mixed sums S_ab = sum x^a y^b for a, b in {0, 1, 2}.
struct CrossMoments {
  std::array<double, 9> s{};
  std::int64_t count = 0;

  void add(double x, double y) {
    const double xs[3] = {1.0, x, x * x};
    const double ys[3] = {1.0, y, y * y};
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) s[static_cast<std::size_t>(3 * a + b)] += xs[a] * ys[b];
    ++count;
  }
  void merge(const CrossMoments& o) {
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += o.s[i];
    count += o.count;
  }
  double at(int a, int b) const { return s[static_cast<std::size_t>(3 * a + b)]; }
};

std::int64_t stream_share(const McConfig& cfg, int stream) {
  const std::int64_t base = cfg.samples / cfg.streams;
  return base + (stream < cfg.samples % cfg.streams ? 1 : 0);
}

/// Runs `body(engine, count, acc)` for every stream and merges in stream order.
template <class Acc, class Body>
Acc run_streams(const McConfig& cfg, bool parallel, Body body) {
  cfg.validate();
  std::vector<Acc> parts(static_cast<std::size_t>(cfg.streams));
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int j = 0; j < cfg.streams; ++j) {
      auto eng = make_engine(cfg.seed, static_cast<std::uint64_t>(j));
      body(eng, stream_share(cfg, j), parts[static_cast<std::size_t>(j)]);
    }
  } else {
    for (int j = 0; j < cfg.streams; ++j) {
      auto eng = make_engine(cfg.seed, static_cast<std::uint64_t>(j));
      body(eng, stream_share(cfg, j), parts[static_cast<std::size_t>(j)]);
    }
  }
  Acc total;
  for (const Acc& p : parts) total.merge(p);
  return total;
}

Estimate finish(const Moments& m, std::uint64_t seed) {
  const auto n = static_cast<double>(m.count);
  const double mean = m.sum / n;
  const double var = std::max(0.0, (m.sumsq - m.sum * mean) / (n - 1.0));
  return {mean, std::sqrt(var / n), m.count, seed};
}

Estimate finish(const CrossMoments& m, std::uint64_t seed) {
  const auto n = static_cast<double>(m.count);
  const double p = m.at(1, 0) / n;
  const double q = m.at(0, 1) / n;
  const double cov = m.at(1, 1) / n - p * q;
  // Mean of ((x - p)(y - q))^2 expanded over the stored sums.
  const double m4 = (m.at(2, 2) - 2.0 * q * m.at(2, 1) + q * q * m.at(2, 0) - 2.0 * p * m.at(1, 2) +
                     4.0 * p * q * m.at(1, 1) - 2.0 * p * q * q * m.at(1, 0) + p * p * m.at(0, 2) -
                     2.0 * p * p * q * m.at(0, 1)) / n +
                    p * p * q * q;
  const double var = std::max(0.0, m4 - cov * cov);
  return {cov * n / (n - 1.0), std::sqrt(var / n), m.count, seed};
}

void check_rho(double rho) {
  if (!(std::abs(rho) <= 1.0)) throw PreconditionError("correlation must lie in [-1, 1]");
}

std::size_t check_index(const gauss::Halfspace& h, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > h.dim()) {
    throw PreconditionError("coordinate " + std::to_string(k) + " outside 1.." + std::to_string(h.dim()));
  }
  return static_cast<std::size_t>(k - 1);
}

Estimate orthant(const gauss::GaussianPair& p, const McConfig& cfg, bool par) {
  check_rho(p.rho);
  const double c = std::sqrt(std::max(0.0, 1.0 - p.rho * p.rho));
  auto m = run_streams<Moments>(cfg, par, [&](std::mt19937_64& eng, std::int64_t count, Moments& acc) {
    for (std::int64_t i = 0; i < count; ++i) {
      const double xi = normal(eng);
      const double eta = p.rho * xi + c * normal(eng);
      acc.add(xi > p.t && eta > p.s ? 1.0 : 0.0);
    }
  });
  return finish(m, cfg.seed);
}

Estimate halfspace_influence(const gauss::Halfspace& h, int k, const McConfig& cfg, bool par) {
  const std::size_t kk = check_index(h, k);
  const auto w = h.w();
  auto m = run_streams<Moments>(cfg, par, [&](std::mt19937_64& eng, std::int64_t count, Moments& acc) {
    std::vector<double> x(w.size());
    for (std::int64_t i = 0; i < count; ++i) {
      double dot = 0.0;
      for (std::size_t j = 0; j < w.size(); ++j) {
        x[j] = normal(eng);
        dot += w[j] * x[j];
      }
      const double sgn = dot > h.t() ? 1.0 : (dot < h.t() ? -1.0 : 0.0);
      acc.add(sgn * x[kk]);
    }
  });
  return finish(m, cfg.seed);
}

Estimate sectional_influence(const gauss::Halfspace& h, int k, const McConfig& cfg, bool par) {
  const std::size_t kk = check_index(h, k);
  const auto w = h.w();
  if (!(w[kk] > 0.0)) throw PreconditionError("sectional influence needs w_k > 0");
  if (w.size() == 1) {
    cfg.validate();
    return {gauss::pdf(h.t() / w[kk]), 0.0, 0, cfg.seed};
  }
  auto m = run_streams<Moments>(cfg, par, [&](std::mt19937_64& eng, std::int64_t count, Moments& acc) {
    for (std::int64_t i = 0; i < count; ++i) {
      double rest = 0.0;
      for (std::size_t j = 0; j < w.size(); ++j) {
        if (j != kk) rest += w[j] * normal(eng);
      }
      acc.add(gauss::pdf((h.t() - rest) / w[kk]));
    }
  });
  return finish(m, cfg.seed);
}

Estimate general_cov(const stieltjes::MonotoneStep& f, const stieltjes::MonotoneStep& g, double rho,
                     const McConfig& cfg, bool par) {
  check_rho(rho);
  const double c = std::sqrt(std::max(0.0, 1.0 - rho * rho));
  // Covariance is shift invariant; centring on f(0), g(0) keeps constant stretches exactly zero.
  const double fx = f(0.0);
  const double gy = g(0.0);
  auto m = run_streams<CrossMoments>(cfg, par, [&](std::mt19937_64& eng, std::int64_t count, CrossMoments& acc) {
    for (std::int64_t i = 0; i < count; ++i) {
      const double z1 = normal(eng);
      const double z2 = rho * z1 + c * normal(eng);
      acc.add(f(z1) - fx, g(z2) - gy);
    }
  });
  return finish(m, cfg.seed);
}

}  // namespace

void McConfig::validate() const {
  if (samples < 100) throw PreconditionError("Monte Carlo needs at least 100 samples");
  if (streams < 1) throw PreconditionError("Monte Carlo needs at least one stream");
  if (streams > samples) throw PreconditionError("more streams than samples");
}

bool Estimate::covers(double value, double z) const { return std::abs(mean - value) <= z * std_error; }

nlohmann::json to_json(const Estimate& e) {
  return {{"mean", e.mean}, {"std_error", e.std_error}, {"n", e.n}, {"seed", e.seed}};
}

namespace serial {
Estimate mc_orthant(const gauss::GaussianPair& p, const McConfig& cfg) { return orthant(p, cfg, false); }
Estimate mc_halfspace_influence(const gauss::Halfspace& h, int k, const McConfig& cfg) {
  return halfspace_influence(h, k, cfg, false);
}
Estimate mc_sectional_influence(const gauss::Halfspace& h, int k, const McConfig& cfg) {
  return sectional_influence(h, k, cfg, false);
}
Estimate mc_general_cov(const stieltjes::MonotoneStep& f, const stieltjes::MonotoneStep& g, double rho,
                        const McConfig& cfg) {
  return general_cov(f, g, rho, cfg, false);
}
}  // namespace serial

namespace parallel {
Estimate mc_orthant(const gauss::GaussianPair& p, const McConfig& cfg) { return orthant(p, cfg, true); }
Estimate mc_halfspace_influence(const gauss::Halfspace& h, int k, const McConfig& cfg) {
  return halfspace_influence(h, k, cfg, true);
}
Estimate mc_sectional_influence(const gauss::Halfspace& h, int k, const McConfig& cfg) {
  return sectional_influence(h, k, cfg, true);
}
Estimate mc_general_cov(const stieltjes::MonotoneStep& f, const stieltjes::MonotoneStep& g, double rho,
                        const McConfig& cfg) {
  return general_cov(f, g, rho, cfg, true);
}
}  // namespace parallel

}  // namespace monocorr::mc
