#include "permlocal/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "permlocal/bijections.hpp"
#include "permlocal/limits.hpp"
#include "permlocal/rooted.hpp"

namespace permlocal {

namespace {

const Permutation kPat231{2, 3, 1};
const Permutation kPat321{3, 2, 1};

// Runs `body` and records the first failure message it reports.
class Check {
 public:
  explicit Check(std::string name) { r_.name = std::move(name); }
  void expect(bool cond, const std::function<std::string()>& why) {
    ++r_.cases;
    if (!cond && r_.ok) {
      r_.ok = false;
      r_.detail = why();
    }
  }
  CheckResult done() { return std::move(r_); }

 private:
  CheckResult r_;
};

CheckResult check_btree(int max_n) {
  Check c("perm<->btree roundtrip");
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& s : enumerate_class(kPat231, n)) {
      const auto t = perm_to_btree(s);
      c.expect(t.size() == n && btree_to_perm(t) == s, [&] { return "sigma=" + to_string(s); });
    }
    for (const auto& t : all_binary_trees(n)) {
      c.expect(perm_to_btree(btree_to_perm(t)) == t, [&] { return "tree=" + to_string(t); });
    }
  }
  return c.done();
}

CheckResult check_otree(int max_n) {
  Check c("perm<->otree roundtrip and leaf labels");
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& s : enumerate_class(kPat321, n)) {
      const auto t = perm_to_otree(s);
      c.expect(t.size() == n + 1 && otree_to_perm(t) == s && leaf_labels(t).q == e_plus(s),
               [&] { return "sigma=" + to_string(s); });
    }
    for (const auto& t : all_ordered_trees(n + 1)) {
      c.expect(perm_to_otree(otree_to_perm(t)) == t, [&] { return "contour=" + contour(t); });
    }
  }
  return c.done();
}

CheckResult check_split_recursion(int max_n) {
  Check c("max-split recursion of consecutive occurrences");
  std::vector<std::vector<Permutation>> cls(max_n + 1);
  for (int k = 1; k <= max_n; ++k) cls[k] = enumerate_class(kPat231, k);
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& s : cls[n]) {
      const auto [sl, sr] = split_at_max_std(s);
      const int l = indmax(s);
      for (int k = 1; k <= n; ++k) {
        for (const auto& pi : cls[k]) {
          const int m = indmax(pi);
          const int a = l - m + 1, b = l + k - m;
          const std::int64_t hit = (a >= 1 && b <= n && pat_interval(s, a, b) == pi) ? 1 : 0;
          c.expect(c_occ(pi, s) == c_occ(pi, sl) + c_occ(pi, sr) + hit,
                   [&] { return "sigma=" + to_string(s) + " pi=" + to_string(pi); });
        }
      }
    }
  }
  return c.done();
}

CheckResult check_star_identity(int max_n) {
  Check c("star-insertion identity");
  for (int n = 2; n <= max_n; ++n) {
    for (const auto& s : all_permutations(n)) {
      for (int k = 1; k < n && k <= 3; ++k) {
        for (const auto& pi : all_permutations(k)) {
          std::int64_t total = pat_interval(s, n - k + 1, n) == pi ? 1 : 0;
          for (int m = 1; m <= k + 1; ++m) total += c_occ(star_insert(pi, m), s);
          c.expect(c_occ(pi, s) == total, [&] { return "sigma=" + to_string(s) + " pi=" + to_string(pi); });
        }
      }
    }
  }
  return c.done();
}

CheckResult check_root_counting(int max_n) {
  Check c("root counting equals window counts");
  for (int n = 3; n <= max_n; ++n) {
    for (const auto& s : all_permutations(n)) {
      for (int h = 1; 2 * h + 1 <= n; ++h) {
        std::map<Permutation, std::int64_t> rooted;
        for (int i = h + 1; i <= n - h; ++i) ++rooted[restrict(RootedPermutation(s, i), h).sigma];
        c.expect(rooted == window_pattern_counts(s, 2 * h + 1),
                 [&] { return "sigma=" + to_string(s) + " h=" + std::to_string(h); });
      }
    }
  }
  return c.done();
}

CheckResult check_contour_labels(int max_vertices) {
  Check c("contour shape iff post-order leaf labels");
  for (int n = 2; n <= max_vertices; ++n) {
    const int edges = n - 1;
    for (const auto& t : all_ordered_trees(n)) {
      const auto w = contour(t);
      const auto q = leaf_labels(t).q;
      for (unsigned mask = 0; mask < (1u << (edges - 1)); ++mask) {
        std::vector<int> a{1};
        for (int x = 2; x <= edges; ++x) {
          if ((mask >> (x - 2)) & 1u) a.push_back(x);
        }
        c.expect(contour_shape_check(w, a) == (a == q), [&] { return "contour=" + w; });
      }
    }
  }
  return c.done();
}

CheckResult check_ultrametric(int triples) {
  Check c("local distance ultrametric");
  std::mt19937_64 gen(20240601);
  std::vector<int> base(11);
  auto draw = [&](const std::vector<int>& b) {
    std::vector<int> w = b;
    if (gen() & 1) std::swap(w[gen() % w.size()], w[gen() % w.size()]);
    return restrict(RootedPermutation(Permutation(w), 6), 1 + static_cast<int>(gen() % 5));
  };
  for (int t = 0; t < triples; ++t) {
    for (int i = 0; i < 11; ++i) base[i] = i + 1;
    std::shuffle(base.begin(), base.end(), gen);
    const auto x = draw(base), y = draw(base), z = draw(base);
    const auto dxy = local_distance(x, y), dyz = local_distance(y, z), dxz = local_distance(x, z);
    c.expect(dxz <= std::max(dxy, dyz) && dxy == local_distance(y, x) && (dxy == 0) == (x == y),
             [&] { return to_string(x) + " " + to_string(y) + " " + to_string(z); });
  }
  return c.done();
}

CheckResult check_normalization(int k_max) {
  Check c("limit laws sum to one");
  c.expect(genfun_normalization_check(k_max), [] { return std::string("normalization identity failed"); });
  return c.done();
}

CheckResult check_symbolic(int k_max) {
  Check c("symbolic pattern probabilities");
  const Permutation example = parse_permutation("4,1,3,2,6,5,7,10,8,9,11,12,16,13,15,14");
  SymbolicPatterns memo;
  c.expect(memo.joint(example) == RationalPoly::monomial(15, 7), [] { return std::string("worked example"); });
  for (int k = 1; k <= k_max; ++k) {
    for (const auto& pi : enumerate_class(kPat231, k)) {
      const auto& j = memo.joint(pi);
      const auto f = j.factored();
      const auto mx = maxima(pi);
      int dsum = 0;
      for (int x : mx) dsum += max_distance(pi, x);
      const int lr = static_cast<int>(lr_maxima(pi).size()), rl = static_cast<int>(rl_maxima(pi).size());
      const bool ok = j.evaluate(Rational(1, 2)) == p231(pi) && f && f->c == 1 &&
                      f->a + f->b == static_cast<int>(mx.size()) - 1 + 2 * dsum &&
                      memo.begin(pi).evaluate(Rational(1, 2)) == pow2(rl + 1 - 2 * k) &&
                      memo.end(pi).evaluate(Rational(1, 2)) == pow2(lr + 1 - 2 * k);
      c.expect(ok, [&] { return "pi=" + to_string(pi); });
    }
  }
  return c.done();
}

CheckResult check_enumeration(int max_n) {
  Check c("class sizes are Catalan numbers");
  for (int n = 1; n <= max_n; ++n) {
    const BigInt cat = catalan(n);
    c.expect(BigInt(enumerate_class(kPat231, n).size()) == cat && BigInt(enumerate_class(kPat321, n).size()) == cat,
             [&] { return "n=" + std::to_string(n); });
  }
  return c.done();
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"bijections", "identities", "normalization", "symbolic", "enumeration", "all"};
}

std::vector<CheckResult> verify_suite(const std::string& suite, int max_n) {
  if (max_n < 1) throw std::invalid_argument("max-n must be >= 1");
  const auto names = verify_suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  const bool all = suite == "all";
  std::vector<CheckResult> out;
  if (all || suite == "enumeration") out.push_back(check_enumeration(std::min(max_n, 12)));
  if (all || suite == "bijections") {
    out.push_back(check_btree(std::min(max_n, 12)));
    out.push_back(check_otree(std::min(max_n, 12)));
  }
  if (all || suite == "identities") {
    out.push_back(check_split_recursion(std::min(max_n, 9)));
    out.push_back(check_star_identity(std::min(max_n, 9)));
    out.push_back(check_root_counting(std::min(max_n, 9)));
    out.push_back(check_contour_labels(std::min(max_n + 1, 12)));
    out.push_back(check_ultrametric(10000));
  }
  if (all || suite == "symbolic") out.push_back(check_symbolic(std::min(max_n, 10)));
  if (all || suite == "normalization") out.push_back(check_normalization(std::min(max_n, 12)));
  return out;
}

}  // namespace permlocal
