#include <doctest.h>

#include <random>

#include "permlocal/rooted.hpp"
#include "test_support.hpp"

using namespace permlocal;

namespace {
Permutation P(const char* s) { return parse_permutation(s); }
RootedPermutation R(const char* s, int i) { return RootedPermutation(P(s), i); }
}  // namespace

TEST_CASE("order form") {
  const auto fo = to_order(R("752934861", 4));
  CHECK(fo.lo() == -3);
  CHECK(fo.hi() == 5);
  CHECK(fo.chain() == std::vector<int>{5, -1, 1, 2, -2, 4, -3, 3, 0});
  CHECK(fo.precedes(5, -1));
  CHECK_FALSE(fo.precedes(0, 3));

  const auto single = to_order(R("1", 1));
  CHECK(single.lo() == 0);
  CHECK(single.hi() == 0);
  CHECK(from_order(to_order(R("41523", 3))) == R("41523", 3));

  // The chain shifted to [1,n] is the inverse permutation.
  for (const auto& s : all_permutations(5)) {
    for (int i = 1; i <= 5; ++i) {
      auto chain = to_order(RootedPermutation(s, i)).chain();
      for (int& x : chain) x += i;
      CHECK(Permutation(chain) == inverse(s));
      CHECK(from_order(to_order(RootedPermutation(s, i))) == RootedPermutation(s, i));
    }
  }
  CHECK_THROWS_AS(FiniteOrder(1, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteOrder(0, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(RootedPermutation(P("12"), 3), std::out_of_range);
}

TEST_CASE("restriction") {
  CHECK(restrict(R("752934861", 4), 2) == R("41523", 3));
  CHECK(restrict(R("241356789", 5), 3) == R("3124567", 4));
  CHECK(restrict(R("41523", 3), 7) == R("41523", 3));
  CHECK_THROWS_AS(restrict(R("41523", 3), 0), std::invalid_argument);
  const auto fo = restrict(to_order(R("752934861", 4)), 2);
  CHECK(fo.chain() == std::vector<int>{-1, 1, 2, -2, 0});
  for (const auto& s : all_permutations(6)) {
    for (int i = 1; i <= 6; ++i) {
      const RootedPermutation x(s, i);
      for (int h2 = 1; h2 <= 5; ++h2) {
        for (int h1 = 1; h1 <= h2; ++h1) CHECK(restrict(restrict(x, h2), h1) == restrict(x, h1));
        CHECK(local_distance(x, restrict(x, h2)) <= pow2(-h2));
      }
    }
  }
}

TEST_CASE("local distance examples") {
  CHECK(local_distance(R("41523", 3), R("41523", 3)) == 0);
  CHECK(local_distance(R("1", 1), R("21", 1)) == 1);
  CHECK(local_distance(R("231", 2), R("2314", 2)) == Rational(1, 2));
  CHECK(local_distance(R("2314", 2), R("231", 2)) == Rational(1, 2));
}

TEST_CASE("ultrametric on random triples") {
  std::mt19937_64 gen(7);
  // Perturb a common base far from the root so that distances vary.
  auto draw = [&](const Permutation& base) {
    std::vector<int> w = base.word();
    const int n = static_cast<int>(w.size());
    const int a = static_cast<int>(gen() % n), b = static_cast<int>(gen() % n);
    if (gen() % 2) std::swap(w[a], w[b]);
    const int h = 1 + static_cast<int>(gen() % 5);
    return restrict(RootedPermutation(Permutation(w), 6), h);
  };
  std::vector<int> base(11);
  for (int t = 0; t < 10000; ++t) {
    for (int i = 0; i < 11; ++i) base[i] = i + 1;
    std::shuffle(base.begin(), base.end(), gen);
    const Permutation b(base);
    const auto x = draw(b), y = draw(b), z = draw(b);
    const auto dxy = local_distance(x, y), dyz = local_distance(y, z), dxz = local_distance(x, z);
    CHECK(dxz <= std::max(dxy, dyz));
    CHECK(dxy == local_distance(y, x));
    CHECK((dxy == 0) == (x == y));
  }
}

TEST_CASE("consistency and gluing") {
  const auto x = R("752934861", 4);
  std::vector<RootedPermutation> fam;
  for (int h = 1; h <= 5; ++h) fam.push_back(restrict(x, h));
  CHECK(is_consistent(fam));
  CHECK(glue(fam) == to_order(restrict(x, 5)));

  std::vector<RootedPermutation> bad{R("1", 1), R("312", 2)};
  CHECK_FALSE(is_consistent(bad));
  CHECK_THROWS_AS(glue(bad), std::invalid_argument);

  std::vector<RootedPermutation> one{R("213", 2)};
  CHECK(is_consistent(one));
  CHECK_THROWS_AS(is_consistent(std::vector<RootedPermutation>{}), std::invalid_argument);
}

TEST_CASE("shift sets") {
  const auto up = to_order(R("12", 1));    // 0 below 1
  const auto down = to_order(R("21", 1));  // 1 below 0
  CHECK(in_shift_set(up, P("12"), -1));
  CHECK_FALSE(in_shift_set(down, P("12"), -1));
  CHECK(in_shift_set(down, P("21"), -1));
  CHECK(in_shift_set(up, P("1"), -1));
  CHECK(in_shift_set(down, P("1"), -1));
  CHECK_FALSE(in_shift_set(down, P("21"), 0));
  const auto fo = to_order(R("752934861", 4));  // 5≼-1≼1≼2≼-2≼4≼-3≼3≼0
  CHECK(in_shift_set(fo, P("12"), 0));           // 1 ≼ 2
  CHECK_FALSE(in_shift_set(fo, P("21"), 0));
  CHECK(in_shift_set(fo, P("132"), -2));         // -1 ≼ 1 ≼ 0
  CHECK_FALSE(in_shift_set(fo, P("312"), -2));
  CHECK_FALSE(in_shift_set(fo, P("12"), 5));
}

TEST_CASE("root counting matches consecutive occurrences") {
  for (int n = 3; n <= 7; ++n) {
    for (const auto& s : all_permutations(n)) {
      for (int h = 1; 2 * h + 1 <= n; ++h) {
        std::map<Permutation, std::int64_t> rooted;
        for (int i = 1; i <= n; ++i) {
          const auto r = restrict(RootedPermutation(s, i), h);
          if (r.root == h + 1 && r.size() == 2 * h + 1) ++rooted[r.sigma];
        }
        for (const auto& [pi, c] : window_pattern_counts(s, 2 * h + 1)) CHECK(rooted[pi] == c);
        std::int64_t total = 0;
        for (const auto& [pi, c] : rooted) total += c;
        CHECK(total == n - 2 * h);
      }
    }
  }
}

TEST_CASE("rooted text format") {
  CHECK(parse_rooted("7,5,2,9,3,4,8,6,1@4") == R("752934861", 4));
  CHECK(parse_rooted("21@1") == R("21", 1));
  CHECK(to_string(R("21", 1)) == "2,1@1");
  CHECK_THROWS_AS(parse_rooted("21"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rooted("21@x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rooted("21@3"), std::out_of_range);
}
