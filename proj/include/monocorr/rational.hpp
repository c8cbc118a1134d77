#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace monocorr {

/// Exact rational number with 64-bit numerator and denominator.
///
/// Always kept normalized: gcd(num, den) == 1 and den > 0. Intermediate
/// products are formed in 128 bits; a result that does not fit in 64 bits
/// raises OverflowError instead of wrapping. Cube statistics only ever
/// produce dyadic values with denominators up to 4^n, so the range is ample
/// for every supported dimension.
class Rational {
public:
  constexpr Rational() noexcept = default;
  Rational(std::int64_t num) noexcept : num_(num) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  /// Builds num/den from 128-bit parts, reducing before narrowing.
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  double to_double() const noexcept;
  std::string to_string() const;

  bool is_zero() const noexcept { return num_ == 0; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace monocorr
