#include <doctest.h>

#include "permlocal/limits.hpp"
#include "test_support.hpp"

using namespace permlocal;

namespace {
Permutation P(const char* s) { return parse_permutation(s); }
const Permutation k231 = Permutation{2, 3, 1};
const Permutation k321 = Permutation{3, 2, 1};
const Permutation kLong = parse_permutation("4,1,3,2,6,5,7,10,8,9,11,12,16,13,15,14");
}  // namespace

TEST_CASE("rational polynomials") {
  const auto p = RationalPoly::p(), q = RationalPoly::one_minus_p();
  CHECK((p * q).expanded_string() == "[0, 1, -1]");
  CHECK((p * q).divide_one_minus_p() == p);
  CHECK_THROWS_AS(p.divide_one_minus_p(), std::domain_error);
  CHECK(RationalPoly::monomial(15, 7).factored_string() == "p^15*(1-p)^7");
  CHECK(RationalPoly::monomial(1, 0).factored_string() == "p");
  CHECK(RationalPoly(1).factored_string() == "1");
  CHECK((p + q) == RationalPoly(1));
  CHECK((p - p).is_zero());
  CHECK((p - p).expanded_string() == "[0]");
  CHECK(RationalPoly::monomial(2, 3).evaluate(Rational(1, 3)) == Rational(8, 243));
  const auto f = RationalPoly::monomial(3, 2).factored();
  REQUIRE(f.has_value());
  CHECK(f->c == 1);
  CHECK(f->a == 3);
  CHECK(f->b == 2);
  CHECK_FALSE((p + RationalPoly(1)).factored().has_value());
  CHECK((RationalPoly(Rational(1, 2)) * p).coefficient(1) == Rational(1, 2));
  CHECK(binary_tree_probability(2) == RationalPoly::monomial(1, 3));
}

TEST_CASE("limit pattern laws") {
  CHECK(p231(P("132985476")) == Rational(1, 2048));
  CHECK(p231(P("1")) == 1);
  CHECK(p231(kLong) == pow2(-22));
  CHECK_THROWS_AS(p231(P("231")), std::invalid_argument);
  CHECK(p321(P("123")) == Rational(1, 2));
  CHECK(p321(P("1")) == 1);
  CHECK(p321(P("231")) == Rational(1, 8));
  CHECK(p321(P("2143")) == 0);
  CHECK_THROWS_AS(p321(P("321")), std::invalid_argument);
  const std::vector<Rational> size3{Rational(1, 4), Rational(1, 4), Rational(1, 8), Rational(1, 8), Rational(1, 4)};
  const auto cls = enumerate_class(k231, 3);
  for (std::size_t j = 0; j < cls.size(); ++j) CHECK(p231(cls[j]) == size3[j]);
}

TEST_CASE("symbolic pattern probabilities") {
  CHECK(symbolic_pat_j(kLong) == RationalPoly::monomial(15, 7));
  CHECK(symbolic_pat_j(kLong).factored_string() == "p^15*(1-p)^7");
  CHECK(symbolic_pat_j(P("1")) == RationalPoly(1));
  CHECK(symbolic_pat_j(P("12")) == RationalPoly::p());
  CHECK(symbolic_pat_b(P("1")) == RationalPoly(1));
  CHECK(symbolic_pat_e(P("1")) == RationalPoly(1));
  CHECK(boundary_limit_b(P("21")) == Rational(1, 2));
  CHECK(boundary_limit_e(P("12")) == Rational(1, 2));
  CHECK_THROWS_AS(symbolic_pat_j(P("231")), std::invalid_argument);

  SymbolicPatterns memo;
  for (int k = 1; k <= 7; ++k) {
    for (const auto& pi : enumerate_class(k231, k)) {
      const auto& j = memo.joint(pi);
      CHECK(j.evaluate(Rational(1, 2)) == p231(pi));
      const auto f = j.factored();
      REQUIRE(f.has_value());
      CHECK(f->c == 1);
      const auto mx = maxima(pi);
      int dsum = 0;
      for (int x : mx) dsum += max_distance(pi, x);
      CHECK(f->a + f->b == static_cast<int>(mx.size()) - 1 + 2 * dsum);
      CHECK(static_cast<int>(mx.size()) + dsum == k);
      const int lr = static_cast<int>(lr_maxima(pi).size()), rl = static_cast<int>(rl_maxima(pi).size());
      CHECK(memo.begin(pi).evaluate(Rational(1, 2)) == pow2(rl + 1 - 2 * k));
      CHECK(memo.end(pi).evaluate(Rational(1, 2)) == pow2(lr + 1 - 2 * k));
    }
  }
}

TEST_CASE("distance between maxima") {
  const auto pi = P("132985476");
  CHECK(max_distance(pi, 2) == 1);
  CHECK(max_distance(pi, 8) == 2);
  CHECK(max_distance(pi, indmax(pi)) == 0);
  CHECK_THROWS_AS(max_distance(pi, 3), std::invalid_argument);
}

TEST_CASE("class enumeration") {
  const std::vector<Permutation> a231{P("123"), P("132"), P("213"), P("312"), P("321")};
  const std::vector<Permutation> a321{P("123"), P("132"), P("213"), P("231"), P("312")};
  CHECK(enumerate_class(k231, 3) == a231);
  CHECK(enumerate_class(k321, 3) == a321);
  CHECK(enumerate_class(k231, 1) == std::vector<Permutation>{P("1")});
  const std::int64_t expect[] = {1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  for (int n = 1; n <= 10; ++n) {
    CHECK(catalan(n) == expect[n - 1]);
    CHECK(static_cast<std::int64_t>(enumerate_class(k231, n).size()) == expect[n - 1]);
    CHECK(static_cast<std::int64_t>(enumerate_class(k321, n).size()) == expect[n - 1]);
  }
  for (int n = 1; n <= 7; ++n) {
    CHECK(enumerate_class(k231, n) == oracle::avoiders(k231, n));
    CHECK(enumerate_class(k321, n) == oracle::avoiders(k321, n));
  }
  CHECK_THROWS_AS(enumerate_class(P("123"), 3), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_class(k231, 13), std::invalid_argument);
}

TEST_CASE("normalization") {
  CHECK(genfun_normalization_check(9));
  CHECK_THROWS_AS(genfun_normalization_check(13), std::invalid_argument);
  BigInt w = 0;
  for (const auto& pi : enumerate_class(k231, 3)) {
    w += BigInt(1) << static_cast<int>(lr_maxima(pi).size() + rl_maxima(pi).size());
  }
  CHECK(w == 64);
}

TEST_CASE("finite law from order marginals") {
  const auto m2 = exact_order_marginals_321(2);
  CHECK(m2.at(P("12")) == Rational(3, 4));
  CHECK(m2.at(P("21")) == Rational(1, 4));
  const auto law2 = finite_from_order(m2, 1e-9);
  CHECK(law2.at(P("12")) == Rational(3, 4));
  CHECK(law2.at(P("21")) == Rational(1, 4));

  const auto one = finite_from_order({{P("1"), Rational(1)}}, 1e-9);
  CHECK(one.size() == 1);
  CHECK(one.at(P("1")) == 1);
  CHECK_THROWS_AS(finite_from_order({{P("12"), Rational(1, 2)}}, 1e-3), std::invalid_argument);
  CHECK_THROWS_AS(finite_from_order({}, 1e-3), std::invalid_argument);

  // The window pattern of the 321 limit follows the limit pattern law.
  for (int n = 1; n <= 6; ++n) {
    const auto law = finite_from_order(exact_order_marginals_321(n), 0.0);
    Rational total = 0;
    for (const auto& [rho, pr] : law) {
      total += pr;
      CHECK(pr == (avoids(rho, k321) ? p321(rho) : Rational(0)));
    }
    CHECK(total == 1);
  }
}
