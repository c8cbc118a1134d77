#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <vector>

#include "monocorr/cube/boolean_family.hpp"
#include "monocorr/error.hpp"

using namespace monocorr;
using namespace monocorr::cube;

namespace {

Rational R(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

// Brute-force membership from the defining predicate.
template <class Pred>
BooleanFamily by_predicate(int n, Pred pred) {
  std::vector<std::uint64_t> members;
  for (std::uint64_t j = 0; j < (std::uint64_t{1} << n); ++j) {
    std::vector<int> x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = static_cast<int>((j >> i) & 1);
    if (pred(x)) members.push_back(j);
  }
  return make_family(n, members);
}

int ones(const std::vector<int>& x) {
  int s = 0;
  for (int v : x) s += v;
  return s;
}

}  // namespace

TEST_CASE("generators match their predicates") {
  CHECK(generate(Majority{7}) == by_predicate(7, [](auto& x) { return 2 * ones(x) > 7; }));
  CHECK(generate(Majority{6}) == by_predicate(6, [](auto& x) { return 2 * ones(x) > 6; }));
  CHECK(generate(Dictator{9, 4}) == by_predicate(9, [](auto& x) { return x[4] == 1; }));
  CHECK(generate(Threshold{8, 3}) == by_predicate(8, [](auto& x) { return ones(x) >= 3; }));
  CHECK(generate(Tribes{12, 3}) == by_predicate(12, [](auto& x) {
          for (int b = 0; b < 4; ++b)
            if (x[3 * b] && x[3 * b + 1] && x[3 * b + 2]) return true;
          return false;
        }));
  CHECK(generate(Ltf{{3, 2, 1, 1}, 2.5}) ==
        by_predicate(4, [](auto& x) { return 3.0 * x[0] + 2.0 * x[1] + x[2] + x[3] > 2.5; }));
}

TEST_CASE("hex encoding") {
  CHECK(generate(Majority{3}).to_hex() == "e8");
  CHECK(generate(Tribes{4, 2}).to_hex() == "88f8");
  CHECK(generate(Ltf{{3, 2, 1, 1}, 2.5}).to_hex() == "eaee");
  const auto t = generate(Tribes{8, 4});
  CHECK(BooleanFamily::from_hex(8, t.to_hex()) == t);
  CHECK_THROWS_AS(BooleanFamily::from_hex(3, "e"), PreconditionError);
  CHECK_THROWS_AS(BooleanFamily::from_hex(2, "ff"), PreconditionError);
}

TEST_CASE("classification and influences, enumerated values") {
  const auto maj3 = generate(Majority{3});
  auto p = classify(maj3);
  CHECK(p.increasing);
  CHECK(p.balanced);
  CHECK(p.regular);
  CHECK(influence_profile(maj3).per_coordinate == std::vector<Rational>(3, R(1, 2)));

  const auto tribes = generate(Tribes{6, 2});
  p = classify(tribes);
  CHECK(p.measure == R(37, 64));
  CHECK(p.regular);
  CHECK_FALSE(p.balanced);
  CHECK(influence_profile(tribes).total == R(27, 16));

  const auto ltf = generate(Ltf{{3, 2, 1, 1}, 2.5});
  CHECK(classify(ltf).measure == R(11, 16));
  CHECK(influence_profile(ltf).per_coordinate == std::vector<Rational>{R(5, 8), R(3, 8), R(1, 8), R(1, 8)});
  CHECK_FALSE(classify(ltf).regular);

  CHECK(classify(generate(Threshold{5, 2})).measure == R(13, 16));
  CHECK(influence_profile(generate(Threshold{5, 2})).total == R(5, 4));

  const auto anti = by_predicate(4, [](auto& x) { return x[0] == 0; });
  CHECK_FALSE(classify(anti).increasing);
}

TEST_CASE("pair statistics, enumerated values") {
  const auto d = generate(Dictator{5, 0});
  const auto m = generate(Majority{5});
  CHECK(covariance(d, m) == R(3, 32));
  CHECK(w1(d, m) == R(3, 8));
  CHECK(agreement(m, d) == R(11, 16));
  CHECK(covariance(generate(Majority{7}), generate(Threshold{7, 3})) == R(29, 256));
  CHECK(w1(generate(Majority{7}), generate(Threshold{7, 3})) == R(525, 1024));
  CHECK(covariance(generate(Tribes{6, 2}), generate(Majority{6})) == R(297, 2048));
  CHECK_THROWS_AS(covariance(d, generate(Majority{3})), DimensionError);
}

TEST_CASE("influence equals flip sensitivity and first-level weight for increasing families") {
  for (const FamilyDescriptor& desc : std::vector<FamilyDescriptor>{
           Majority{9}, Tribes{10, 5}, Threshold{11, 4}, Ltf{{5, 1, 1, 2, 3, 1, 1}, 6.5}, RandomMonotone{12, 5}}) {
    const auto f = generate(desc);
    const auto inf = influence_profile(f).per_coordinate;
    CHECK(inf == flip_sensitivity(f));
    CHECK(inf == first_level_coefficients(f));
  }
  // Without monotonicity the first-level weight may be negative while influence is not.
  const auto anti = by_predicate(3, [](auto& x) { return x[0] == 0; });
  CHECK(first_level_coefficients(anti)[0] == R(-1));
  CHECK(influence_profile(anti).per_coordinate[0] == R(1));
}

TEST_CASE("complement reverses covariance sign") {
  const auto m = generate(Majority{5});
  const auto t = generate(Tribes{5, 5});
  CHECK(covariance(m.complement(), t) == -covariance(m, t));
  CHECK(m.complement().complement() == m);
}

TEST_CASE("random monotone descriptors are reproducible and near balanced") {
  const auto a = generate(RandomMonotone{11, 3});
  CHECK(a == generate(RandomMonotone{11, 3}));
  CHECK(classify(a).increasing);
  const auto ltf = realize(RandomMonotone{11, 3});
  for (double w : ltf.weights) CHECK(w > 0.0);
  CHECK(generate(ltf) == a);
  CHECK(a.count() > 0);
  CHECK(a.count() < a.points());
}

TEST_CASE("descriptor validation names the descriptor") {
  CHECK_THROWS_WITH_AS(validate(Tribes{10, 3}), doctest::Contains("tribes(10,3)"), PreconditionError);
  CHECK_THROWS_AS(validate(Dictator{4, 4}), PreconditionError);
  CHECK_THROWS_AS(validate(Ltf{{1, -1}, 0}), PreconditionError);
  CHECK_THROWS_AS(validate(Threshold{4, 6}), PreconditionError);
  CHECK_THROWS_AS(validate(Majority{25}), PreconditionError);
  CHECK_NOTHROW(validate(Majority{25}, 26));
  CHECK_THROWS_AS(validate(Majority{29}, 29), PreconditionError);
  CHECK(label(Tribes{12, 3}) == "tribes(12,3)");
  CHECK(label(RandomMonotone{8, 42}) == "random_monotone(8,42)");
}

TEST_CASE("truth table invariants are enforced") {
  CHECK_THROWS_AS(BooleanFamily(3, {0x1ff}), PreconditionError);
  CHECK_THROWS_AS(BooleanFamily(7, {0}), PreconditionError);
  CHECK_THROWS_AS(make_family(3, std::vector<std::uint64_t>{8}), PreconditionError);
  CHECK_THROWS_AS(generate(Majority{0}), PreconditionError);
}
