#pragma once

namespace monocorr::gauss {

inline constexpr double kInvSqrt2Pi = 0.398942280401432677939946059934;
inline constexpr double kLogSqrt2Pi = 0.918938533204672741780329736406;

/// Standard normal density.
double pdf(double t);
double log_pdf(double t);

/// P(Z > t) through erfc; positive down to the double underflow near t = 38.
double upper_tail(double t);

/// log P(Z > t), finite for every finite t (continued-fraction Mills ratio
/// beyond the erfc range).
double log_upper_tail(double t);

/// Bivariate standard normal density with correlation r, |r| < 1.
double bivariate_density(double r, double t, double s);

/// phi_r(t,s) / (phi(t) phi(s)); |r| < 1.
double h_integrand(double r, double t, double s);

/// Standard normal quantile for u in (0, 1).
double quantile(double u);

}  // namespace monocorr::gauss
