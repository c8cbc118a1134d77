#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "monocorr/cube/kernels.hpp"
#include "monocorr/rational.hpp"

namespace monocorr::cube {

inline constexpr int kDefaultDimensionCap = 24;
/// Absolute ceiling on the cap; keeps every exact statistic inside 64-bit rationals.
inline constexpr int kMaxDimension = 28;

/// A subset of {0,1}^n stored as a 2^n-bit truth table.
///
/// Point j is a member iff bit j is set; coordinate i of point j is bit i
/// of j. Immutable after construction, so instances are safe to share
/// between concurrent readers.
class BooleanFamily {
public:
  /// Takes ownership of a truth table; trailing bits past 2^n must be zero.
  BooleanFamily(int n, std::vector<kernels::Word> words, int cap = kDefaultDimensionCap);

  int n() const noexcept { return n_; }
  std::uint64_t count() const noexcept { return count_; }
  std::uint64_t points() const noexcept { return std::uint64_t{1} << n_; }
  std::span<const kernels::Word> words() const noexcept { return words_; }

  bool contains(std::uint64_t point) const;
  BooleanFamily complement() const;

  /// Truth table as lowercase hex, byte 0 first, each byte high nibble first.
  std::string to_hex() const;
  static BooleanFamily from_hex(int n, const std::string& hex, int cap = kDefaultDimensionCap);

  friend bool operator==(const BooleanFamily& a, const BooleanFamily& b) noexcept {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

private:
  int n_;
  std::vector<kernels::Word> words_;
  std::uint64_t count_;
};

struct FamilyProfile {
  Rational measure;
  bool increasing = false;
  bool balanced = false;
  bool regular = false;
};

struct InfluenceProfile {
  std::vector<Rational> per_coordinate;
  Rational total;
};

// Family descriptors. Coordinates are 0-based throughout.

struct Dictator {
  int n;
  int i;
};
struct Majority {
  int n;
};
struct Tribes {
  int n;
  int r;
};
struct Ltf {
  std::vector<double> weights;
  double t;
};
struct Threshold {
  int n;
  int k;
};
struct RandomMonotone {
  int n;
  std::uint64_t seed;
};

using FamilyDescriptor = std::variant<Dictator, Majority, Tribes, Ltf, Threshold, RandomMonotone>;

int dimension(const FamilyDescriptor& desc);
std::string kind_name(const FamilyDescriptor& desc);
/// Short unique-ish identifier, e.g. "tribes(12,3)".
std::string label(const FamilyDescriptor& desc);
/// Throws PreconditionError naming the problem when the descriptor is malformed.
void validate(const FamilyDescriptor& desc, int cap = kDefaultDimensionCap);

BooleanFamily make_family(int n, std::span<const std::uint64_t> members, int cap = kDefaultDimensionCap);

FamilyProfile classify(const BooleanFamily& f);
InfluenceProfile influence_profile(const BooleanFamily& f);
Rational covariance(const BooleanFamily& f, const BooleanFamily& g);
Rational agreement(const BooleanFamily& f, const BooleanFamily& h);
Rational w1(const BooleanFamily& f, const BooleanFamily& g);
std::vector<Rational> first_level_coefficients(const BooleanFamily& f);

/// mu({x : 1_A(x) != 1_A(x xor e_k)}) for every k, by direct flip comparison.
std::vector<Rational> flip_sensitivity(const BooleanFamily& f);

/// The positive-weight LTF a random_monotone descriptor stands for.
Ltf realize(const RandomMonotone& desc);

BooleanFamily generate(const FamilyDescriptor& desc, int cap = kDefaultDimensionCap);

}  // namespace monocorr::cube
