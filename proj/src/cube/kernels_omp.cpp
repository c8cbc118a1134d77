#include <bit>
#include <cstddef>

#include "monocorr/cube/kernels.hpp"

namespace monocorr::kernels::parallel {

namespace {

using Index = std::ptrdiff_t;

Index size_of(std::span<const Word> a) { return static_cast<Index>(a.size()); }

}  // namespace

std::uint64_t popcount(std::span<const Word> a) {
  std::uint64_t total = 0;
  const Index m = size_of(a);
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (Index i = 0; i < m; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i]));
  return total;
}

std::uint64_t popcount_and(std::span<const Word> a, std::span<const Word> b) {
  std::uint64_t total = 0;
  const Index m = size_of(a);
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (Index i = 0; i < m; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
  return total;
}

std::uint64_t popcount_xor(std::span<const Word> a, std::span<const Word> b) {
  std::uint64_t total = 0;
  const Index m = size_of(a);
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (Index i = 0; i < m; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i] ^ b[i]));
  return total;
}

std::vector<std::uint64_t> exit_counts(std::span<const Word> a, int n) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n), 0);
  const Index m = size_of(a);
  for (int k = 0; k < n; ++k) {
    std::uint64_t total = 0;
    if (k < 6) {
      const Word lo = low_half_mask(k);
      const unsigned shift = 1u << k;
#pragma omp parallel for reduction(+ : total) schedule(static)
      for (Index i = 0; i < m; ++i) {
        const Word w = a[i];
        const Word flipped = ((w >> shift) & lo) | ((w & lo) << shift);
        total += static_cast<std::uint64_t>(std::popcount(w & ~flipped));
      }
    } else {
      const Index stride = Index{1} << (k - 6);
#pragma omp parallel for reduction(+ : total) schedule(static)
      for (Index i = 0; i < m; ++i) {
        total += static_cast<std::uint64_t>(std::popcount(a[i] & ~a[i ^ stride]));
      }
    }
    out[static_cast<std::size_t>(k)] = total;
  }
  return out;
}

std::vector<std::uint64_t> upper_counts(std::span<const Word> a, int n) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n), 0);
  const Index m = size_of(a);
  for (int k = 0; k < n; ++k) {
    std::uint64_t total = 0;
    if (k < 6) {
      const Word hi = ~low_half_mask(k);
#pragma omp parallel for reduction(+ : total) schedule(static)
      for (Index i = 0; i < m; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i] & hi));
    } else {
      const Index stride = Index{1} << (k - 6);
#pragma omp parallel for reduction(+ : total) schedule(static)
      for (Index i = 0; i < m; ++i) {
        if (i & stride) total += static_cast<std::uint64_t>(std::popcount(a[i]));
      }
    }
    out[static_cast<std::size_t>(k)] = total;
  }
  return out;
}

bool is_upward_closed(std::span<const Word> a, int n) {
  const Index m = size_of(a);
  bool closed = true;
  for (int k = 0; k < n && closed; ++k) {
    if (k < 6) {
      const Word lo = low_half_mask(k);
      const unsigned shift = 1u << k;
#pragma omp parallel for reduction(&& : closed) schedule(static)
      for (Index i = 0; i < m; ++i) {
        const Word w = a[i];
        closed = closed && ((((w & lo) << shift) & ~w) == 0);
      }
    } else {
      const Index stride = Index{1} << (k - 6);
#pragma omp parallel for reduction(&& : closed) schedule(static)
      for (Index i = 0; i < m; ++i) {
        closed = closed && ((i & stride) || (a[i] & ~a[i | stride]) == 0);
      }
    }
  }
  return closed;
}

void fill_threshold(std::span<Word> out, int n, int level) {
  const std::uint64_t points = std::uint64_t{1} << n;
  const Index m = static_cast<Index>(out.size());
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < m; ++i) {
    Word w = 0;
    for (unsigned b = 0; b < 64; ++b) {
      const std::uint64_t j = static_cast<std::uint64_t>(i) * 64 + b;
      if (j >= points) break;
      if (std::popcount(j) >= level) w |= Word{1} << b;
    }
    out[static_cast<std::size_t>(i)] = w;
  }
}

void fill_linear_threshold(std::span<Word> out, std::span<const double> weights, double t) {
  const std::uint64_t points = std::uint64_t{1} << weights.size();
  const Index m = static_cast<Index>(out.size());
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < m; ++i) {
    Word w = 0;
    for (unsigned b = 0; b < 64; ++b) {
      const std::uint64_t j = static_cast<std::uint64_t>(i) * 64 + b;
      if (j >= points) break;
      double sum = 0.0;
      for (std::size_t c = 0; c < weights.size(); ++c) {
        if ((j >> c) & 1u) sum += weights[c];
      }
      if (sum > t) w |= Word{1} << b;
    }
    out[static_cast<std::size_t>(i)] = w;
  }
}

}  // namespace monocorr::kernels::parallel
