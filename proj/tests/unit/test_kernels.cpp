#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "monocorr/cube/kernels.hpp"

namespace k = monocorr::kernels;
using k::Word;

namespace {

bool bit(const std::vector<Word>& a, std::uint64_t j) { return (a[j >> 6] >> (j & 63)) & 1u; }

std::vector<Word> random_table(int n, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::vector<Word> a(k::words_for(n));
  for (auto& w : a) w = eng();
  a.back() &= k::tail_mask(n);
  return a;
}

// Upward closure of random seeds: a monotone table built point by point.
std::vector<Word> random_monotone_table(int n, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  const std::uint64_t points = std::uint64_t{1} << n;
  std::vector<Word> a(k::words_for(n), 0);
  for (int s = 0; s < 3; ++s) {
    const std::uint64_t g = eng() & (points - 1);
    for (std::uint64_t j = 0; j < points; ++j)
      if ((j & g) == g) a[j >> 6] |= Word{1} << (j & 63);
  }
  return a;
}

}  // namespace

TEST_CASE("exit and upper counts match a per-point oracle") {
  for (int n : {1, 3, 5, 6, 7, 10, 13}) {
    const auto a = random_table(n, 100 + n);
    const auto exits = k::serial::exit_counts(a, n);
    const auto uppers = k::serial::upper_counts(a, n);
    for (int i = 0; i < n; ++i) {
      std::uint64_t e = 0, u = 0;
      for (std::uint64_t j = 0; j < (std::uint64_t{1} << n); ++j) {
        if (!bit(a, j)) continue;
        if (!bit(a, j ^ (std::uint64_t{1} << i))) ++e;
        if ((j >> i) & 1) ++u;
      }
      CHECK(exits[i] == e);
      CHECK(uppers[i] == u);
    }
  }
}

TEST_CASE("serial and parallel kernels agree bit for bit") {
  for (int n : {2, 5, 6, 9, 14, 18}) {
    const auto a = random_table(n, 7 * n);
    const auto b = random_table(n, 7 * n + 1);
    CHECK(k::serial::popcount(a) == k::parallel::popcount(a));
    CHECK(k::serial::popcount_and(a, b) == k::parallel::popcount_and(a, b));
    CHECK(k::serial::popcount_xor(a, b) == k::parallel::popcount_xor(a, b));
    CHECK(k::serial::exit_counts(a, n) == k::parallel::exit_counts(a, n));
    CHECK(k::serial::upper_counts(a, n) == k::parallel::upper_counts(a, n));
    const auto m = random_monotone_table(n, n);
    CHECK(k::serial::is_upward_closed(m, n) == k::parallel::is_upward_closed(m, n));

    std::vector<Word> s(k::words_for(n)), p(k::words_for(n));
    k::serial::fill_threshold(s, n, n / 2);
    k::parallel::fill_threshold(p, n, n / 2);
    CHECK(s == p);
    std::vector<double> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = 0.1 + 0.37 * i;
    k::serial::fill_linear_threshold(s, w, 1.3);
    k::parallel::fill_linear_threshold(p, w, 1.3);
    CHECK(s == p);
  }
}

TEST_CASE("upward closure") {
  for (int n : {3, 6, 8, 11}) {
    const auto m = random_monotone_table(n, 31 * n);
    CHECK(k::serial::is_upward_closed(m, n));
    auto broken = m;
    // Remove the top point: the set stops being closed unless it was the only member.
    const std::uint64_t top = (std::uint64_t{1} << n) - 1;
    broken[top >> 6] &= ~(Word{1} << (top & 63));
    CHECK_FALSE(k::parallel::is_upward_closed(broken, n));
  }
}

TEST_CASE("threshold fill counts binomial layers") {
  std::vector<Word> a(k::words_for(10));
  k::serial::fill_threshold(a, 10, 6);
  CHECK(k::serial::popcount(a) == 386u);  // C(10,6)+...+C(10,10)
  std::vector<Word> small(1);
  k::parallel::fill_threshold(small, 3, 2);
  CHECK(small[0] == 0xe8u);
}

TEST_CASE("mask helpers") {
  CHECK(k::words_for(3) == 1u);
  CHECK(k::words_for(6) == 1u);
  CHECK(k::words_for(10) == 16u);
  CHECK(k::tail_mask(3) == 0xffu);
  CHECK(k::tail_mask(6) == ~Word{0});
  for (int i = 0; i < 6; ++i) CHECK(std::popcount(k::low_half_mask(i)) == 32);
}
