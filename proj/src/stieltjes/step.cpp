#include "monocorr/stieltjes/step.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <numbers>

#include "monocorr/error.hpp"
#include "monocorr/gauss/halfspace.hpp"
#include "monocorr/gauss/normal.hpp"
#include "monocorr/gauss/orthant.hpp"

namespace monocorr::stieltjes {

namespace {

constexpr double kSupport = 39.0;

void require_rho(double rho) {
  if (!(rho >= 0.0 && rho <= 1.0)) throw PreconditionError("correlation must lie in [0, 1]");
}

double log_e_over_square(double a) { return 1.0 - 2.0 * std::log(a); }

}  // namespace

double MonotoneStep::operator()(double x) const {
  double value = base_;
  for (std::size_t j = 0; j < breakpoints_.size() && breakpoints_[j] < x; ++j) value += jumps_[j];
  return value;
}

MonotoneStep MonotoneStep::scaled(double alpha) const {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw PreconditionError("scale factor must lie in (0, 1]");
  MonotoneStep out = *this;
  for (double& d : out.jumps_) d *= alpha;
  return out;
}

MonotoneStep make_step(double base, std::span<const std::pair<double, double>> points) {
  if (!std::isfinite(base) || base < 0.0) throw PreconditionError("step base must be finite and >= 0");
  MonotoneStep f;
  f.base_ = base;
  double top = base;
  for (std::size_t j = 0; j < points.size(); ++j) {
    const auto [t, delta] = points[j];
    if (!std::isfinite(t)) throw PreconditionError("step breakpoint must be finite");
    if (j > 0 && !(t > points[j - 1].first)) throw PreconditionError("step breakpoints must be strictly increasing");
    if (!(delta > 0.0) || !std::isfinite(delta)) throw PreconditionError("step jumps must be positive");
    f.breakpoints_.push_back(t);
    f.jumps_.push_back(delta);
    top += delta;
  }
  if (top > 1.0 + 1e-12) throw PreconditionError("step function exceeds 1 (reaches " + std::to_string(top) + ")");
  return f;
}

StieltjesMoments moments(const MonotoneStep& f) {
  StieltjesMoments m;
  for (std::size_t j = 0; j < f.atoms(); ++j) {
    const double t = f.breakpoints()[j];
    const double weight = f.jumps()[j] * gauss::pdf(t);
    m.mass += f.jumps()[j];
    m.a += weight;
    m.b += (1.0 + std::abs(t)) * weight;
  }
  return m;
}

double attenuated_moment(const MonotoneStep& f) {
  double sum = 0.0;
  for (std::size_t j = 0; j < f.atoms(); ++j) {
    const double t = f.breakpoints()[j];
    sum += f.jumps()[j] * gauss::pdf(t) / (1.0 + std::abs(t));
  }
  return sum;
}

double a_via_expectation(const MonotoneStep& f, const gauss::QuadratureConfig& cfg) {
  // f is constant between consecutive breakpoints; integrate each piece.
  std::vector<double> cuts{-kSupport};
  for (double t : f.breakpoints()) {
    if (t > -kSupport && t < kSupport) cuts.push_back(t);
  }
  cuts.push_back(kSupport);

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = cuts[i + 1];
    const double level = f(0.5 * (lo + hi));
    if (level == 0.0) continue;
    auto integrand = [level](double x) { return level * x * gauss::pdf(x); };
    total += gauss::integrate(integrand, lo, hi, cfg).value;
  }
  return total;
}

Lemma52Result lemma52_check(const MonotoneStep& f) {
  const auto m = moments(f);
  Lemma52Result r;
  r.lhs = m.b;
  if (m.a == 0.0) {
    r.pass = r.intermediate_pass = (m.b == 0.0);
    return r;
  }
  r.rhs = 2.0 * m.a * std::sqrt(log_e_over_square(m.a));
  const double ratio = m.mass / (std::sqrt(2.0 * std::numbers::pi) * m.a);
  r.intermediate_rhs = m.a * (1.0 + std::sqrt(std::max(0.0, 2.0 * std::log(ratio))));
  r.pass = r.lhs <= r.rhs + 1e-12;
  r.intermediate_pass = r.lhs <= r.intermediate_rhs + 1e-12;
  return r;
}

namespace serial {

double general_cov(const MonotoneStep& f, const MonotoneStep& g, double rho, const gauss::QuadratureConfig& cfg) {
  require_rho(rho);
  double total = 0.0;
  for (std::size_t j = 0; j < f.atoms(); ++j) {
    for (std::size_t l = 0; l < g.atoms(); ++l) {
      const gauss::GaussianPair p{f.breakpoints()[j], g.breakpoints()[l], rho};
      total += f.jumps()[j] * g.jumps()[l] * gauss::orthant_excess(p, cfg);
    }
  }
  return total;
}

}  // namespace serial

namespace parallel {

double general_cov(const MonotoneStep& f, const MonotoneStep& g, double rho, const gauss::QuadratureConfig& cfg) {
  require_rho(rho);
  const std::size_t nf = f.atoms();
  const std::size_t ng = g.atoms();
  std::vector<double> terms(nf * ng);
  std::exception_ptr failure;
  const auto m = static_cast<std::ptrdiff_t>(terms.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t idx = 0; idx < m; ++idx) {
    const std::size_t j = static_cast<std::size_t>(idx) / ng;
    const std::size_t l = static_cast<std::size_t>(idx) % ng;
    try {
      const gauss::GaussianPair p{f.breakpoints()[j], g.breakpoints()[l], rho};
      terms[static_cast<std::size_t>(idx)] = f.jumps()[j] * g.jumps()[l] * gauss::orthant_excess(p, cfg);
    } catch (...) {
#pragma omp critical(monocorr_cov_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  double total = 0.0;
  for (double x : terms) total += x;
  return total;
}

}  // namespace parallel

audit::AuditReport theorem3_report(const MonotoneStep& f, const MonotoneStep& g, std::span<const double> w,
                                   std::span<const double> v, const gauss::QuadratureConfig& cfg, std::string label) {
  auto unit = [](std::span<const double> x) {
    double n2 = 0.0;
    for (double e : x) n2 += e * e;
    return std::abs(std::sqrt(n2) - 1.0) <= 1e-12;
  };
  if (w.empty() || !unit(w) || !unit(v)) throw PreconditionError("theorem3 audit needs unit vectors w and v");
  const double rho = gauss::correlation(w, v);
  if (rho < 0.0) throw PreconditionError("theorem3 audit needs <w, v> >= 0");

  const double cov = general_cov(f, g, rho, cfg);
  const double af = moments(f).a;
  const double ag = moments(g).a;
  double rhs = 0.0;
  if (rho > 0.0 && af > 0.0 && ag > 0.0) {
    rhs = rho * af * ag / (std::sqrt(log_e_over_square(af)) * std::sqrt(log_e_over_square(ag)));
  }

  audit::AuditReport r;
  r.label = std::move(label);
  r.n = static_cast<int>(w.size());
  r.inequality = "theorem3";
  r.cov = cov;
  r.rhs_core = rhs;
  r.ratio = audit::Ratio::of(cov, rhs);
  r.extra = {{"a_f", af}, {"a_g", ag}, {"rho", rho}};
  return r;
}

}  // namespace monocorr::stieltjes
