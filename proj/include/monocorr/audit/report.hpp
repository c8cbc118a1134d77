#pragma once

#include <map>
#include <string>
#include <variant>

#include "json.hpp"
#include "monocorr/rational.hpp"

namespace monocorr::audit {

enum class RatioKind { finite, infinite, vacuous };

/// cov / rhs_core with the degenerate cases made explicit.
struct Ratio {
  RatioKind kind = RatioKind::vacuous;
  double value = 0.0;  // meaningful only when kind == finite

  static Ratio of(double cov, double rhs_core);
  std::string to_string() const;
  bool is_finite() const noexcept { return kind == RatioKind::finite; }
};

/// One inequality instance: covariance, bound core (universal constant
/// dropped), and their ratio.
struct AuditReport {
  std::string label;
  int n = 0;
  std::string inequality;
  std::variant<Rational, double> cov;
  double rhs_core = 0.0;
  Ratio ratio;
  nlohmann::json descriptors = nlohmann::json::object();
  /// Extra numeric columns (e.g. a_f, a_g, rho), emitted in key order.
  std::map<std::string, double> extra;
  /// Free-form flags such as "anomaly" or the argmax family.
  std::map<std::string, std::string> notes;

  double cov_value() const;
};

}  // namespace monocorr::audit
