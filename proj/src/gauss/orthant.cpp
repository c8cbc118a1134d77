#include "monocorr/gauss/orthant.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "monocorr/error.hpp"
#include "monocorr/gauss/normal.hpp"

namespace monocorr::gauss {

namespace {

// Beyond this point phi underflows to zero in double precision.
constexpr double kTailCutoff = 39.0;

void require_nonnegative_rho(const GaussianPair& p) {
  p.validate();
  if (p.rho < 0.0) throw PreconditionError("correlation must be non-negative");
}

}  // namespace

void GaussianPair::validate() const {
  if (!std::isfinite(t) || !std::isfinite(s)) throw PreconditionError("thresholds must be finite");
  if (!(std::abs(rho) <= 1.0)) throw PreconditionError("correlation must satisfy |rho| <= 1");
}

double normalized_plackett_integral(const GaussianPair& p, const QuadratureConfig& cfg) {
  require_nonnegative_rho(p);
  if (p.rho == 0.0) return 0.0;
  const double diff2 = (p.t - p.s) * (p.t - p.s);
  const double ts = p.t * p.s;
  auto integrand = [diff2, ts](double theta) {
    const double r = std::sin(theta);
    const double c = std::cos(theta);
    if (c <= 0.0) return diff2 == 0.0 ? std::exp(0.5 * ts) : 0.0;
    return std::exp(-0.5 * r * r * diff2 / (c * c) + ts * r / (1.0 + r));
  };
  const double upper = p.rho >= 1.0 ? std::numbers::pi / 2 : std::asin(p.rho);
  return integrate(integrand, 0.0, upper, cfg).value;
}

double orthant_excess(const GaussianPair& p, const QuadratureConfig& cfg) {
  require_nonnegative_rho(p);
  if (p.rho == 0.0) return 0.0;
  if (p.rho >= 1.0) {
    const double hi = std::max(p.t, p.s);
    const double lo = std::min(p.t, p.s);
    return upper_tail(hi) * upper_tail(-lo);
  }
  // phi(t) phi(s) formed once in log space.
  return std::exp(log_pdf(p.t) + log_pdf(p.s)) * normalized_plackett_integral(p, cfg);
}

double plackett_orthant(const GaussianPair& p, const QuadratureConfig& cfg) {
  require_nonnegative_rho(p);
  if (p.rho >= 1.0) return upper_tail(std::max(p.t, p.s));
  return upper_tail(p.t) * upper_tail(p.s) + orthant_excess(p, cfg);
}

double sign_cov(const GaussianPair& p, const QuadratureConfig& cfg) { return 4.0 * orthant_excess(p, cfg); }

double orthant_by_conditioning(const GaussianPair& p, const QuadratureConfig& cfg) {
  require_nonnegative_rho(p);
  if (p.rho >= 1.0) throw PreconditionError("conditioning route needs rho < 1");
  const double lo = std::max(p.t, -kTailCutoff);
  if (lo >= kTailCutoff) return 0.0;
  const double scale = std::sqrt((1.0 - p.rho) * (1.0 + p.rho));
  auto integrand = [&](double x) { return pdf(x) * upper_tail((p.s - p.rho * x) / scale); };
  // The tail factor steps from 0 to 1 around s / rho over a width of order
  // scale / rho; cut there and at the density peak.
  std::vector<double> cuts{lo, kTailCutoff, 0.0};
  if (p.rho > 0.0) {
    const double centre = p.s / p.rho;
    const double width = scale / p.rho;
    for (double k : {-8.0, -2.0, 0.0, 2.0, 8.0}) cuts.push_back(centre + k * width);
  }
  std::erase_if(cuts, [&](double x) { return !(x >= lo && x <= kTailCutoff); });
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) total += integrate(integrand, cuts[i], cuts[i + 1], cfg).value;
  return total;
}

double gamma_ratio(const GaussianPair& p, const QuadratureConfig& cfg) {
  require_nonnegative_rho(p);
  const double weight = 4.0 * (1.0 + std::abs(p.t)) * (1.0 + std::abs(p.s));
  if (p.rho == 0.0) return weight;
  return weight / p.rho * normalized_plackett_integral(p, cfg);
}

LemmaD1Result lemmaD1_check(double t, double k, int samples) {
  if (!(t >= 1.0) || !(k >= 1.0)) throw PreconditionError("integrand floor check needs t >= 1 and k >= 1");
  if (samples < 2) throw PreconditionError("integrand floor check needs at least 2 samples");
  const double r_max = 1.0 / (2.0 * t * k);
  double min_h = INFINITY;
  for (int i = 0; i < samples; ++i) {
    const double r = r_max * i / (samples - 1);
    min_h = std::min(min_h, h_integrand(r, t, -k));
  }
  return {min_h, min_h >= std::exp(-1.0) - 1e-12};
}

}  // namespace monocorr::gauss
