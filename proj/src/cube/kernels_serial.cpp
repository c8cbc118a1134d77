#include <bit>
#include <cstddef>

#include "monocorr/cube/kernels.hpp"

namespace monocorr::kernels::serial {

std::uint64_t popcount(std::span<const Word> a) {
  std::uint64_t total = 0;
  for (Word w : a) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

std::uint64_t popcount_and(std::span<const Word> a, std::span<const Word> b) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
  return total;
}

std::uint64_t popcount_xor(std::span<const Word> a, std::span<const Word> b) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += static_cast<std::uint64_t>(std::popcount(a[i] ^ b[i]));
  return total;
}

std::vector<std::uint64_t> exit_counts(std::span<const Word> a, int n) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < n; ++k) {
    std::uint64_t total = 0;
    if (k < 6) {
      const Word lo = low_half_mask(k);
      const unsigned shift = 1u << k;
      for (Word w : a) {
        const Word flipped = ((w >> shift) & lo) | ((w & lo) << shift);
        total += static_cast<std::uint64_t>(std::popcount(w & ~flipped));
      }
    } else {
      const std::size_t stride = std::size_t{1} << (k - 6);
      for (std::size_t i = 0; i < a.size(); ++i) {
        total += static_cast<std::uint64_t>(std::popcount(a[i] & ~a[i ^ stride]));
      }
    }
    out[static_cast<std::size_t>(k)] = total;
  }
  return out;
}

std::vector<std::uint64_t> upper_counts(std::span<const Word> a, int n) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < n; ++k) {
    std::uint64_t total = 0;
    if (k < 6) {
      const Word hi = ~low_half_mask(k);
      for (Word w : a) total += static_cast<std::uint64_t>(std::popcount(w & hi));
    } else {
      const std::size_t stride = std::size_t{1} << (k - 6);
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (i & stride) total += static_cast<std::uint64_t>(std::popcount(a[i]));
      }
    }
    out[static_cast<std::size_t>(k)] = total;
  }
  return out;
}

bool is_upward_closed(std::span<const Word> a, int n) {
  for (int k = 0; k < n; ++k) {
    if (k < 6) {
      const Word lo = low_half_mask(k);
      const unsigned shift = 1u << k;
      for (Word w : a) {
        if (((w & lo) << shift) & ~w) return false;
      }
    } else {
      const std::size_t stride = std::size_t{1} << (k - 6);
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(i & stride) && (a[i] & ~a[i | stride])) return false;
      }
    }
  }
  return true;
}

void fill_threshold(std::span<Word> out, int n, int level) {
  const std::uint64_t points = std::uint64_t{1} << n;
  for (std::size_t i = 0; i < out.size(); ++i) {
    Word w = 0;
    for (unsigned b = 0; b < 64; ++b) {
      const std::uint64_t j = i * 64 + b;
      if (j >= points) break;
      if (std::popcount(j) >= level) w |= Word{1} << b;
    }
    out[i] = w;
  }
}

void fill_linear_threshold(std::span<Word> out, std::span<const double> weights, double t) {
  const std::uint64_t points = std::uint64_t{1} << weights.size();
  for (std::size_t i = 0; i < out.size(); ++i) {
    Word w = 0;
    for (unsigned b = 0; b < 64; ++b) {
      const std::uint64_t j = i * 64 + b;
      if (j >= points) break;
      double sum = 0.0;
      for (std::size_t c = 0; c < weights.size(); ++c) {
        if ((j >> c) & 1u) sum += weights[c];
      }
      if (sum > t) w |= Word{1} << b;
    }
    out[i] = w;
  }
}

}  // namespace monocorr::kernels::serial
