#include "monocorr/gauss/halfspace.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "monocorr/error.hpp"
#include "monocorr/gauss/normal.hpp"
#include "monocorr/gauss/orthant.hpp"

namespace monocorr::gauss {

Halfspace::Halfspace(std::vector<double> w, double t) : w_(std::move(w)), t_(t) {
  if (w_.empty()) throw PreconditionError("halfspace needs a non-empty weight vector");
  if (!std::isfinite(t_)) throw PreconditionError("halfspace threshold must be finite");
  double norm2 = 0.0;
  for (double x : w_) {
    if (!std::isfinite(x)) throw PreconditionError("halfspace weight must be finite");
    norm2 += x * x;
  }
  if (norm2 == 0.0) throw PreconditionError("halfspace weight vector is zero");
  const double norm = std::sqrt(norm2);
  for (double& x : w_) x /= norm;
}

double correlation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DimensionError("vectors differ in dimension");
  double dot = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
  return std::clamp(dot, -1.0, 1.0);
}

HalfspaceInfluences halfspace_influences(const Halfspace& h) {
  HalfspaceInfluences out;
  const double density = pdf(h.t());
  for (double wk : h.w()) {
    out.signed_influence.push_back(2.0 * density * wk);
    out.indicator_influence.push_back(density * wk);
  }
  return out;
}

audit::AuditReport ltf_pair_report(const Halfspace& a, const Halfspace& b, const QuadratureConfig& cfg,
                                   std::string label) {
  const double rho = correlation(a.w(), b.w());
  if (rho < 0.0) throw PreconditionError("ltf pair audit needs <w_A, w_B> >= 0");

  const GaussianPair pair{a.t(), b.t(), rho};
  const double cov = orthant_excess(pair, cfg);
  const double w1_ab = rho * std::exp(log_pdf(a.t()) + log_pdf(b.t()));
  const double w1_aa = std::exp(2.0 * log_pdf(a.t()));
  const double w1_bb = std::exp(2.0 * log_pdf(b.t()));
  // log(e / W1(A,A)) = 1 + t^2 + log(2 pi), kept in closed form to survive underflow.
  const double log_aa = 1.0 - 2.0 * log_pdf(a.t());
  const double log_bb = 1.0 - 2.0 * log_pdf(b.t());
  const double rhs = w1_ab / (std::sqrt(log_aa) * std::sqrt(log_bb));

  audit::AuditReport r;
  r.label = std::move(label);
  r.n = static_cast<int>(a.dim());
  r.inequality = "gauss_kkm";
  r.cov = cov;
  r.rhs_core = rhs;
  r.ratio = audit::Ratio::of(cov, rhs);
  r.extra = {{"rho", rho}, {"w1_ab", w1_ab}, {"w1_aa", w1_aa}, {"w1_bb", w1_bb}};
  r.descriptors = {{"t_a", a.t()}, {"t_b", b.t()}};
  return r;
}

audit::AuditReport proposition1_report(double t, const QuadratureConfig& cfg) {
  if (!(t >= 1.0) || !std::isfinite(t)) throw PreconditionError("tightness audit needs finite t >= 1");
  const Halfspace a({1.0}, t);
  const Halfspace b({1.0}, -t);
  char label[64];
  std::snprintf(label, sizeof label, "proposition1(t=%g)", t);
  auto r = ltf_pair_report(a, b, cfg, label);
  r.inequality = "proposition1";

  const double w1 = std::exp(2.0 * log_pdf(t));
  const double rhs_simplified = w1 / (t * t + 1.0);
  const double rhs_exact = w1 / (1.0 - 2.0 * log_pdf(t));
  const double cov = r.cov_value();
  r.rhs_core = rhs_simplified;
  r.ratio = audit::Ratio::of(cov, rhs_simplified);
  r.extra["rhs_core_exact"] = rhs_exact;
  r.extra["ratio_exact"] = cov / rhs_exact;
  r.extra["t"] = t;
  return r;
}

}  // namespace monocorr::gauss
