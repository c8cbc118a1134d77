#pragma once

#include <string>

#include "monocorr/audit/report.hpp"
#include "monocorr/cube/boolean_family.hpp"

namespace monocorr::audit {

using cube::BooleanFamily;

/// cov(F,G) against W1 / log(e / W1).
AuditReport talagrand_report(const BooleanFamily& f, const BooleanFamily& g, std::string label = {});

/// cov(F,G) against W1(F,G) / (sqrt(log(e/W1(F,F))) sqrt(log(e/W1(G,G)))).
AuditReport kkm_report(const BooleanFamily& f, const BooleanFamily& g, std::string label = {});

/// cov(F, Maj_n) against log n / sqrt n; F increasing, balanced, regular, n odd.
AuditReport theorem1_report(const BooleanFamily& f, std::string label = {});

/// Best covariance over {dictator(n,0..n-1), Maj_n} against log n / sqrt n.
/// The winning family is recorded in notes["best"].
AuditReport theorem2_report(const BooleanFamily& f, std::string label = {});

/// cov(F,h) - (agreement(F,h)/2 - 1/4); F balanced.
Rational proof1_identity_check(const BooleanFamily& f, const BooleanFamily& h);

/// 2 C(n-1, floor(n/2)) / 2^n for odd n.
Rational majority_influence_exact(int n);

/// (max_k I_k) n / log n for a balanced family with n >= 2.
double kkl_ratio(const BooleanFamily& f);

/// Exact binomial coefficient; throws OverflowError past 64 bits.
std::uint64_t binomial(int n, int k);

}  // namespace monocorr::audit
