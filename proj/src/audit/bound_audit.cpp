#include "monocorr/audit/bound_audit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "monocorr/error.hpp"

namespace monocorr::audit {

namespace {

void require_increasing(const BooleanFamily& f, const char* which) {
  if (!cube::classify(f).increasing) throw PreconditionError(std::string(which) + " family is not increasing");
}

void require_same_n(const BooleanFamily& f, const BooleanFamily& g) {
  if (f.n() != g.n()) {
    throw DimensionError("dimension mismatch: " + std::to_string(f.n()) + " vs " + std::to_string(g.n()));
  }
}

AuditReport base_report(std::string label, int n, const char* inequality, const Rational& cov, double rhs_core) {
  AuditReport r;
  r.label = std::move(label);
  r.n = n;
  r.inequality = inequality;
  r.cov = cov;
  r.rhs_core = rhs_core;
  r.ratio = Ratio::of(cov.to_double(), rhs_core);
  if (rhs_core == 0.0 && cov.num() > 0) r.notes["anomaly"] = "zero bound with positive covariance";
  return r;
}

// log(e / w) for w in (0, 1]; natural log.
double log_e_over(double w) { return 1.0 - std::log(w); }

double log_n_over_sqrt_n(int n) { return std::log(static_cast<double>(n)) / std::sqrt(static_cast<double>(n)); }

}  // namespace

AuditReport talagrand_report(const BooleanFamily& f, const BooleanFamily& g, std::string label) {
  require_same_n(f, g);
  require_increasing(f, "first");
  require_increasing(g, "second");
  const double w = cube::w1(f, g).to_double();
  const double rhs = w > 0 ? w / log_e_over(w) : 0.0;
  return base_report(std::move(label), f.n(), "talagrand", cube::covariance(f, g), rhs);
}

AuditReport kkm_report(const BooleanFamily& f, const BooleanFamily& g, std::string label) {
  require_same_n(f, g);
  require_increasing(f, "first");
  require_increasing(g, "second");
  const double wfg = cube::w1(f, g).to_double();
  const double wff = cube::w1(f, f).to_double();
  const double wgg = cube::w1(g, g).to_double();
  double rhs = 0.0;
  if (wfg > 0 && wff > 0 && wgg > 0) rhs = wfg / (std::sqrt(log_e_over(wff)) * std::sqrt(log_e_over(wgg)));
  return base_report(std::move(label), f.n(), "kkm", cube::covariance(f, g), rhs);
}

AuditReport theorem1_report(const BooleanFamily& f, std::string label) {
  const auto profile = cube::classify(f);
  if (!profile.increasing) throw PreconditionError("theorem1: family is not increasing");
  if (!profile.balanced) throw PreconditionError("theorem1: family is not balanced");
  if (!profile.regular) throw PreconditionError("theorem1: family is not regular");
  if (f.n() % 2 == 0) throw PreconditionError("theorem1: n must be odd");
  const auto maj = cube::generate(cube::Majority{f.n()}, cube::kMaxDimension);
  return base_report(std::move(label), f.n(), "theorem1", cube::covariance(f, maj), log_n_over_sqrt_n(f.n()));
}

AuditReport theorem2_report(const BooleanFamily& f, std::string label) {
  const auto profile = cube::classify(f);
  if (!profile.increasing) throw PreconditionError("theorem2: family is not increasing");
  if (!profile.balanced) throw PreconditionError("theorem2: family is not balanced");
  if (f.n() % 2 == 0) throw PreconditionError("theorem2: n must be odd");

  cube::FamilyDescriptor best_desc = cube::Dictator{f.n(), 0};
  Rational best = cube::covariance(f, cube::generate(best_desc, cube::kMaxDimension));
  for (int i = 1; i < f.n(); ++i) {
    const cube::FamilyDescriptor d = cube::Dictator{f.n(), i};
    const Rational c = cube::covariance(f, cube::generate(d, cube::kMaxDimension));
    if (c > best) {
      best = c;
      best_desc = d;
    }
  }
  const cube::FamilyDescriptor maj = cube::Majority{f.n()};
  const Rational c = cube::covariance(f, cube::generate(maj, cube::kMaxDimension));
  if (c > best) {
    best = c;
    best_desc = maj;
  }
  auto r = base_report(std::move(label), f.n(), "theorem2", best, log_n_over_sqrt_n(f.n()));
  r.notes["best"] = cube::label(best_desc);
  return r;
}

Rational proof1_identity_check(const BooleanFamily& f, const BooleanFamily& h) {
  require_same_n(f, h);
  if (2 * f.count() != f.points()) throw PreconditionError("proof identity: family is not balanced");
  return cube::covariance(f, h) - (cube::agreement(f, h) / Rational(2) - Rational(1, 4));
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (acc > std::numeric_limits<std::uint64_t>::max()) throw OverflowError("binomial exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

Rational majority_influence_exact(int n) {
  if (n < 1 || n % 2 == 0) throw PreconditionError("majority influence formula needs odd n >= 1");
  if (n > 61) throw PreconditionError("majority influence formula supports n <= 61");
  return Rational::from_wide(2 * static_cast<__int128>(binomial(n - 1, n / 2)), static_cast<__int128>(1) << n);
}

double kkl_ratio(const BooleanFamily& f) {
  if (f.n() < 2) throw PreconditionError("kkl ratio needs n >= 2");
  if (2 * f.count() != f.points()) throw PreconditionError("kkl ratio: family is not balanced");
  const auto prof = cube::influence_profile(f);
  const Rational max_i = *std::max_element(prof.per_coordinate.begin(), prof.per_coordinate.end());
  return max_i.to_double() * f.n() / std::log(static_cast<double>(f.n()));
}

}  // namespace monocorr::audit
