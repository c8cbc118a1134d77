#pragma once

#include <cstdint>
#include <random>

namespace monocorr {

/// Engine for stream `stream` of a seeded run. Distinct streams draw from
/// distinct seed sequences, so each owns a deterministic subsequence.
inline std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

/// Uniform on the open interval (0, 1) from 53 random bits.
inline double uniform_open(std::mt19937_64& eng) {
  return (static_cast<double>(eng() >> 11) + 0.5) * 0x1.0p-53;
}

/// Uniform on (0, 1].
inline double uniform_open_closed(std::mt19937_64& eng) {
  return 1.0 - static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

/// Uniform on [lo, hi).
inline double uniform_between(std::mt19937_64& eng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(eng() >> 11) * 0x1.0p-53);
}

/// Uniform integer in [lo, hi].
inline std::int64_t uniform_int(std::mt19937_64& eng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(eng() % span);
}

}  // namespace monocorr
