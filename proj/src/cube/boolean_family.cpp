#include "monocorr/cube/boolean_family.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "monocorr/error.hpp"
#include "monocorr/random.hpp"

namespace monocorr::cube {

namespace kp = kernels::parallel;

namespace {

void check_dimension(int n, int cap) {
  if (cap < 1 || cap > kMaxDimension) {
    throw PreconditionError("dimension cap must lie in [1, " + std::to_string(kMaxDimension) + "]");
  }
  if (n < 1 || n > cap) {
    throw PreconditionError("dimension " + std::to_string(n) + " outside [1, " + std::to_string(cap) + "]");
  }
}

void check_same_dimension(const BooleanFamily& a, const BooleanFamily& b) {
  if (a.n() != b.n()) {
    throw DimensionError("dimension mismatch: " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
  }
}

// count / 2^n as an exact rational.
Rational dyadic(std::uint64_t count, int n) {
  return Rational::from_wide(static_cast<__int128>(count), static_cast<__int128>(1) << n);
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

BooleanFamily::BooleanFamily(int n, std::vector<kernels::Word> words, int cap) : n_(n), words_(std::move(words)) {
  check_dimension(n, cap);
  if (words_.size() != kernels::words_for(n)) {
    throw PreconditionError("truth table length does not match 2^" + std::to_string(n));
  }
  if (n < 6 && (words_[0] & ~kernels::tail_mask(n))) {
    throw PreconditionError("truth table has bits set past 2^" + std::to_string(n));
  }
  count_ = kp::popcount(words_);
}

bool BooleanFamily::contains(std::uint64_t point) const {
  if (point >= points()) throw PreconditionError("point index out of range");
  return (words_[point >> 6] >> (point & 63)) & 1u;
}

BooleanFamily BooleanFamily::complement() const {
  std::vector<kernels::Word> out(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) out[i] = ~words_[i];
  out.back() &= kernels::tail_mask(n_);
  return BooleanFamily(n_, std::move(out), kMaxDimension);
}

std::string BooleanFamily::to_hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  const std::uint64_t bytes = n_ >= 3 ? (points() / 8) : 1;
  std::string out;
  out.reserve(bytes * 2);
  for (std::uint64_t b = 0; b < bytes; ++b) {
    const auto byte = static_cast<unsigned>((words_[b / 8] >> ((b % 8) * 8)) & 0xFFu);
    out.push_back(digits[byte >> 4]);
    out.push_back(digits[byte & 0xFu]);
  }
  return out;
}

BooleanFamily BooleanFamily::from_hex(int n, const std::string& hex, int cap) {
  check_dimension(n, cap);
  const std::uint64_t bytes = n >= 3 ? ((std::uint64_t{1} << n) / 8) : 1;
  if (hex.size() != bytes * 2) throw PreconditionError("hex truth table has wrong length");
  std::vector<kernels::Word> words(kernels::words_for(n), 0);
  auto nibble = [](char c) -> unsigned {
    if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
    throw PreconditionError("invalid hex digit in truth table");
  };
  for (std::uint64_t b = 0; b < bytes; ++b) {
    const kernels::Word byte = (nibble(hex[2 * b]) << 4) | nibble(hex[2 * b + 1]);
    words[b / 8] |= byte << ((b % 8) * 8);
  }
  return BooleanFamily(n, std::move(words), cap);
}

int dimension(const FamilyDescriptor& desc) {
  return std::visit(overloaded{[](const Ltf& d) { return static_cast<int>(d.weights.size()); },
                               [](const auto& d) { return d.n; }},
                    desc);
}

std::string kind_name(const FamilyDescriptor& desc) {
  return std::visit(overloaded{[](const Dictator&) { return std::string("dictator"); },
                               [](const Majority&) { return std::string("majority"); },
                               [](const Tribes&) { return std::string("tribes"); },
                               [](const Ltf&) { return std::string("ltf"); },
                               [](const Threshold&) { return std::string("threshold"); },
                               [](const RandomMonotone&) { return std::string("random_monotone"); }},
                    desc);
}

std::string label(const FamilyDescriptor& desc) {
  return std::visit(
      overloaded{
          [](const Dictator& d) { return "dictator(" + std::to_string(d.n) + "," + std::to_string(d.i) + ")"; },
          [](const Majority& d) { return "majority(" + std::to_string(d.n) + ")"; },
          [](const Tribes& d) { return "tribes(" + std::to_string(d.n) + "," + std::to_string(d.r) + ")"; },
          [](const Ltf& d) {
            std::ostringstream os;
            os << "ltf(" << d.weights.size() << ";";
            for (std::size_t i = 0; i < d.weights.size(); ++i) os << (i ? "," : "") << format_double(d.weights[i]);
            os << ";t=" << format_double(d.t) << ")";
            return os.str();
          },
          [](const Threshold& d) { return "threshold(" + std::to_string(d.n) + "," + std::to_string(d.k) + ")"; },
          [](const RandomMonotone& d) {
            return "random_monotone(" + std::to_string(d.n) + "," + std::to_string(d.seed) + ")";
          }},
      desc);
}

void validate(const FamilyDescriptor& desc, int cap) {
  const std::string name = label(desc);
  try {
    check_dimension(dimension(desc), cap);
  } catch (const PreconditionError& e) {
    throw PreconditionError(name + ": " + e.what());
  }
  std::visit(overloaded{[&](const Dictator& d) {
                          if (d.i < 0 || d.i >= d.n) throw PreconditionError(name + ": coordinate out of range");
                        },
                        [](const Majority&) {},
                        [&](const Tribes& d) {
                          if (d.r < 1) throw PreconditionError(name + ": tribe size must be >= 1");
                          if (d.n % d.r != 0) throw PreconditionError(name + ": tribe size must divide n");
                        },
                        [&](const Ltf& d) {
                          for (double w : d.weights) {
                            if (!std::isfinite(w)) throw PreconditionError(name + ": non-finite weight");
                            if (w < 0) throw PreconditionError(name + ": negative weight");
                          }
                          if (std::isnan(d.t)) throw PreconditionError(name + ": threshold is NaN");
                        },
                        [&](const Threshold& d) {
                          if (d.k < 0 || d.k > d.n + 1) throw PreconditionError(name + ": level outside [0, n+1]");
                        },
                        [](const RandomMonotone&) {}},
             desc);
}

BooleanFamily make_family(int n, std::span<const std::uint64_t> members, int cap) {
  check_dimension(n, cap);
  std::vector<kernels::Word> words(kernels::words_for(n), 0);
  const std::uint64_t points = std::uint64_t{1} << n;
  for (std::uint64_t m : members) {
    if (m >= points) throw PreconditionError("member index " + std::to_string(m) + " out of range for n=" + std::to_string(n));
    words[m >> 6] |= kernels::Word{1} << (m & 63);
  }
  return BooleanFamily(n, std::move(words), cap);
}

InfluenceProfile influence_profile(const BooleanFamily& f) {
  const auto exits = kp::exit_counts(f.words(), f.n());
  InfluenceProfile out;
  out.per_coordinate.reserve(exits.size());
  for (std::uint64_t c : exits) {
    out.per_coordinate.push_back(dyadic(2 * c, f.n()));
    out.total += out.per_coordinate.back();
  }
  return out;
}

FamilyProfile classify(const BooleanFamily& f) {
  FamilyProfile p;
  p.measure = dyadic(f.count(), f.n());
  p.increasing = kp::is_upward_closed(f.words(), f.n());
  p.balanced = 2 * f.count() == f.points();
  const auto exits = kp::exit_counts(f.words(), f.n());
  p.regular = std::all_of(exits.begin(), exits.end(), [&](std::uint64_t c) { return c == exits.front(); });
  return p;
}

Rational covariance(const BooleanFamily& f, const BooleanFamily& g) {
  check_same_dimension(f, g);
  const std::uint64_t both = kp::popcount_and(f.words(), g.words());
  // |A cap B| / 2^n - |A||B| / 4^n
  const __int128 num = static_cast<__int128>(both) * static_cast<__int128>(f.points()) -
                       static_cast<__int128>(f.count()) * static_cast<__int128>(g.count());
  return Rational::from_wide(num, static_cast<__int128>(1) << (2 * f.n()));
}

Rational agreement(const BooleanFamily& f, const BooleanFamily& h) {
  check_same_dimension(f, h);
  return dyadic(f.points() - kp::popcount_xor(f.words(), h.words()), f.n());
}

Rational w1(const BooleanFamily& f, const BooleanFamily& g) {
  check_same_dimension(f, g);
  const auto a = kp::exit_counts(f.words(), f.n());
  const auto b = kp::exit_counts(g.words(), g.n());
  // sum_k (2 a_k / 2^n)(2 b_k / 2^n)
  __int128 num = 0;
  for (std::size_t k = 0; k < a.size(); ++k) num += 4 * static_cast<__int128>(a[k]) * static_cast<__int128>(b[k]);
  return Rational::from_wide(num, static_cast<__int128>(1) << (2 * f.n()));
}

std::vector<Rational> first_level_coefficients(const BooleanFamily& f) {
  const auto upper = kp::upper_counts(f.words(), f.n());
  std::vector<Rational> out;
  out.reserve(upper.size());
  for (std::uint64_t up : upper) {
    const auto lower = static_cast<std::int64_t>(f.count() - up);
    const __int128 diff = static_cast<__int128>(up) - lower;
    out.push_back(Rational::from_wide(2 * diff, static_cast<__int128>(1) << f.n()));
  }
  return out;
}

std::vector<Rational> flip_sensitivity(const BooleanFamily& f) {
  std::vector<Rational> out;
  for (int k = 0; k < f.n(); ++k) {
    std::uint64_t differing = 0;
    for (std::uint64_t x = 0; x < f.points(); ++x) {
      if (f.contains(x) != f.contains(x ^ (std::uint64_t{1} << k))) ++differing;
    }
    out.push_back(dyadic(differing, f.n()));
  }
  return out;
}

Ltf realize(const RandomMonotone& desc) {
  auto eng = make_engine(desc.seed);
  Ltf out;
  out.weights.resize(static_cast<std::size_t>(desc.n));
  for (double& w : out.weights) w = uniform_open_closed(eng);

  // Same summation order as the fill kernel, so the chosen cut separates
  // exactly the intended points.
  const std::uint64_t points = std::uint64_t{1} << desc.n;
  std::vector<double> sums(points);
  for (std::uint64_t j = 0; j < points; ++j) {
    double s = 0.0;
    for (int c = 0; c < desc.n; ++c) {
      if ((j >> c) & 1u) s += out.weights[static_cast<std::size_t>(c)];
    }
    sums[j] = s;
  }
  std::sort(sums.begin(), sums.end());

  // Cutting between sums[i-1] and sums[i] leaves points - i members.
  const std::uint64_t half = points / 2;
  std::uint64_t best = points + 1;
  std::uint64_t best_gap = points + 1;
  for (std::uint64_t i = 0; i <= points; ++i) {
    if (i > 0 && i < points && !(sums[i - 1] < sums[i])) continue;
    const std::uint64_t above = points - i;
    const std::uint64_t gap = above > half ? above - half : half - above;
    if (gap < best_gap) {
      best_gap = gap;
      best = i;
    }
  }
  if (best == 0) {
    out.t = sums.front() - 1.0;
  } else if (best == points) {
    out.t = sums.back() + 1.0;
  } else {
    out.t = sums[best - 1] + (sums[best] - sums[best - 1]) / 2;
  }
  return out;
}

BooleanFamily generate(const FamilyDescriptor& desc, int cap) {
  validate(desc, cap);
  const int n = dimension(desc);
  std::vector<kernels::Word> words(kernels::words_for(n), 0);
  const std::uint64_t points = std::uint64_t{1} << n;

  std::visit(overloaded{[&](const Dictator& d) {
                          for (std::uint64_t j = 0; j < points; ++j) {
                            if ((j >> d.i) & 1u) words[j >> 6] |= kernels::Word{1} << (j & 63);
                          }
                        },
                        [&](const Majority& d) { kp::fill_threshold(words, n, d.n / 2 + 1); },
                        [&](const Tribes& d) {
                          const std::uint64_t block = (std::uint64_t{1} << d.r) - 1;
                          const auto m = static_cast<std::ptrdiff_t>(points);
#pragma omp parallel for schedule(static)
                          for (std::ptrdiff_t jj = 0; jj < m; jj += 64) {
                            kernels::Word w = 0;
                            for (std::ptrdiff_t b = 0; b < 64 && jj + b < m; ++b) {
                              const auto j = static_cast<std::uint64_t>(jj + b);
                              for (int start = 0; start < d.n; start += d.r) {
                                if (((j >> start) & block) == block) {
                                  w |= kernels::Word{1} << b;
                                  break;
                                }
                              }
                            }
                            words[static_cast<std::size_t>(jj >> 6)] = w;
                          }
                        },
                        [&](const Ltf& d) { kp::fill_linear_threshold(words, d.weights, d.t); },
                        [&](const Threshold& d) { kp::fill_threshold(words, n, d.k); },
                        [&](const RandomMonotone& d) {
                          const Ltf ltf = realize(d);
                          kp::fill_linear_threshold(words, ltf.weights, ltf.t);
                        }},
             desc);
  return BooleanFamily(n, std::move(words), cap);
}

}  // namespace monocorr::cube
