#pragma once

// Word-level enumeration kernels over a 2^n-bit truth table.
//
// Bit j of the table is the membership of the point whose binary expansion
// is j; coordinate k of that point is bit k of j. Bits past 2^n in the last
// word must be zero.
//
// Every kernel exists twice: `serial` is the reference implementation kept
// for testing, `parallel` partitions the word range with OpenMP. Both
// return bit-identical results (all reductions are integer sums or logical
// ANDs).

#include <cstdint>
#include <span>
#include <vector>

namespace monocorr::kernels {

using Word = std::uint64_t;

namespace serial {

std::uint64_t popcount(std::span<const Word> a);
std::uint64_t popcount_and(std::span<const Word> a, std::span<const Word> b);
std::uint64_t popcount_xor(std::span<const Word> a, std::span<const Word> b);

/// |{x in A : x xor e_k not in A}| for every k < n.
std::vector<std::uint64_t> exit_counts(std::span<const Word> a, int n);

/// |{x in A : x_k = 1}| for every k < n.
std::vector<std::uint64_t> upper_counts(std::span<const Word> a, int n);

/// True iff x in A and x_k = 0 imply x xor e_k in A for all x, k.
bool is_upward_closed(std::span<const Word> a, int n);

/// Sets bit j iff popcount(j) >= level.
void fill_threshold(std::span<Word> out, int n, int level);

/// Sets bit j iff sum_i weights[i] * bit_i(j) > t (summed in coordinate order).
void fill_linear_threshold(std::span<Word> out, std::span<const double> weights, double t);

}  // namespace serial

namespace parallel {

std::uint64_t popcount(std::span<const Word> a);
std::uint64_t popcount_and(std::span<const Word> a, std::span<const Word> b);
std::uint64_t popcount_xor(std::span<const Word> a, std::span<const Word> b);
std::vector<std::uint64_t> exit_counts(std::span<const Word> a, int n);
std::vector<std::uint64_t> upper_counts(std::span<const Word> a, int n);
bool is_upward_closed(std::span<const Word> a, int n);
void fill_threshold(std::span<Word> out, int n, int level);
void fill_linear_threshold(std::span<Word> out, std::span<const double> weights, double t);

}  // namespace parallel

/// Mask of the bit positions inside one word whose coordinate k is 0 (k < 6).
constexpr Word low_half_mask(int k) {
  constexpr Word masks[6] = {0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
                             0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};
  return masks[k];
}

/// Number of 64-bit words in a truth table of dimension n.
constexpr std::size_t words_for(int n) { return n >= 6 ? (std::size_t{1} << (n - 6)) : 1; }

/// Valid-bit mask for the (single) word of a table with n < 6.
constexpr Word tail_mask(int n) { return n >= 6 ? ~Word{0} : ((Word{1} << (1u << n)) - 1); }

}  // namespace monocorr::kernels
