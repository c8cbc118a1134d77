#include "monocorr/audit/report.hpp"

#include <cstdio>

namespace monocorr::audit {

Ratio Ratio::of(double cov, double rhs_core) {
  if (rhs_core == 0.0) {
    if (cov == 0.0) return {RatioKind::vacuous, 0.0};
    return {RatioKind::infinite, 0.0};
  }
  return {RatioKind::finite, cov / rhs_core};
}

std::string Ratio::to_string() const {
  switch (kind) {
    case RatioKind::vacuous:
      return "vacuous";
    case RatioKind::infinite:
      return "inf";
    case RatioKind::finite:
      break;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

double AuditReport::cov_value() const {
  if (const auto* r = std::get_if<Rational>(&cov)) return r->to_double();
  return std::get<double>(cov);
}

}  // namespace monocorr::audit
