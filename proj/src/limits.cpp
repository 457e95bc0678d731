#include "permlocal/limits.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace permlocal {

namespace {
const Permutation kPat231{2, 3, 1};
const Permutation kPat321{3, 2, 1};

void require_avoids(const Permutation& pi, const Permutation& rho, const char* who) {
  if (pi.empty()) throw std::invalid_argument(std::string(who) + ": empty pattern");
  if (!avoids(pi, rho)) throw std::invalid_argument(std::string(who) + ": pattern contains " + to_string(rho));
}
}  // namespace

Rational p231(const Permutation& pi) {
  require_avoids(pi, kPat231, "p231");
  const int e = static_cast<int>(lr_maxima(pi).size() + rl_maxima(pi).size());
  return pow2(e - 2 * pi.size());
}

Rational p321(const Permutation& pi) {
  require_avoids(pi, kPat321, "p321");
  const int k = pi.size();
  if (pi == Permutation::identity(k)) return Rational(k + 1) * pow2(-k);
  if (inverse_descent_count(pi) == 1) return pow2(-k);
  return 0;
}

RationalPoly binary_tree_probability(int size) {
  if (size < 1) throw std::invalid_argument("binary_tree_probability: size must be >= 1");
  return RationalPoly::monomial(size - 1, size + 1);
}

namespace {
const RationalPoly& memo_insert(std::map<Permutation, RationalPoly>& memo, const Permutation& pi, RationalPoly v) {
  return memo.emplace(pi, std::move(v)).first->second;
}
}  // namespace

const RationalPoly& SymbolicPatterns::joint(const Permutation& pi) {
  if (auto it = joint_.find(pi); it != joint_.end()) return it->second;
  require_avoids(pi, kPat231, "symbolic_pat_j");
  const auto p = RationalPoly::p();
  if (pi.size() == 1) return memo_insert(joint_, pi, 1);
  const auto [l, r] = split_at_max_std(pi);
  RationalPoly v;
  if (!l.empty() && !r.empty()) {
    v = p * p * end(l) * begin(r);
  } else if (!l.empty()) {
    v = p * end(l);
  } else {
    v = p * begin(r);
  }
  return memo_insert(joint_, pi, std::move(v));
}

const RationalPoly& SymbolicPatterns::end(const Permutation& pi) {
  if (auto it = end_.find(pi); it != end_.end()) return it->second;
  require_avoids(pi, kPat231, "symbolic_pat_e");
  const auto p = RationalPoly::p();
  if (pi.size() == 1) return memo_insert(end_, pi, 1);
  const auto [l, r] = split_at_max_std(pi);
  RationalPoly v;
  if (!l.empty() && !r.empty()) {
    v = (p * p * end(l) * binary_tree_probability(r.size())).divide_one_minus_p();
  } else if (!l.empty()) {
    v = p * end(l);
  } else {
    v = (p * binary_tree_probability(r.size())).divide_one_minus_p();
  }
  return memo_insert(end_, pi, std::move(v));
}

const RationalPoly& SymbolicPatterns::begin(const Permutation& pi) {
  if (auto it = begin_.find(pi); it != begin_.end()) return it->second;
  require_avoids(pi, kPat231, "symbolic_pat_b");
  const auto p = RationalPoly::p();
  if (pi.size() == 1) return memo_insert(begin_, pi, 1);
  const auto [l, r] = split_at_max_std(pi);
  RationalPoly v;
  if (!l.empty() && !r.empty()) {
    v = (p * p * binary_tree_probability(l.size()) * begin(r)).divide_one_minus_p();
  } else if (!r.empty()) {
    v = p * begin(r);
  } else {
    v = (p * binary_tree_probability(l.size())).divide_one_minus_p();
  }
  return memo_insert(begin_, pi, std::move(v));
}

RationalPoly symbolic_pat_j(const Permutation& pi) { return SymbolicPatterns().joint(pi); }
RationalPoly symbolic_pat_b(const Permutation& pi) { return SymbolicPatterns().begin(pi); }
RationalPoly symbolic_pat_e(const Permutation& pi) { return SymbolicPatterns().end(pi); }
Rational boundary_limit_b(const Permutation& pi) { return symbolic_pat_b(pi).evaluate(Rational(1, 2)); }
Rational boundary_limit_e(const Permutation& pi) { return symbolic_pat_e(pi).evaluate(Rational(1, 2)); }

int max_distance(const Permutation& pi, int j) {
  const auto lr = lr_maxima(pi);
  const auto rl = rl_maxima(pi);
  auto in = [](const std::vector<int>& s, int x) { return std::binary_search(s.begin(), s.end(), x); };
  if (!in(lr, j) && !in(rl, j)) throw std::invalid_argument("max_distance: index is not a maximum");
  if (j == indmax(pi)) return 0;
  if (in(lr, j)) {
    for (int a = 0;; ++a) {
      if (in(lr, j + 1 + a)) return a;
    }
  }
  for (int a = 0;; ++a) {
    if (in(rl, j - 1 - a)) return a;
  }
}

BigInt catalan(int n) {
  BigInt c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

std::vector<Permutation> enumerate_class(const Permutation& rho, int n) {
  if (rho != kPat231 && rho != kPat321) throw std::invalid_argument("enumerate_class: class must be 231 or 321");
  if (n < 1 || n > 12) throw std::invalid_argument("enumerate_class: n must be in [1,12]");
  // Removing the maximum keeps a permutation in the class, so insert the new maximum everywhere.
  std::vector<Permutation> cur{Permutation::identity(1)};
  for (int m = 2; m <= n; ++m) {
    std::vector<Permutation> next;
    for (const auto& pi : cur) {
      for (int pos = 0; pos < m; ++pos) {
        std::vector<int> w = pi.word();
        w.insert(w.begin() + pos, m);
        auto cand = Permutation::from_trusted(std::move(w));
        if (avoids(cand, rho)) next.push_back(std::move(cand));
      }
    }
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end());
  return cur;
}

bool genfun_normalization_check(int k_max) {
  if (k_max < 1 || k_max > 12) throw std::invalid_argument("genfun_normalization_check: k_max must be in [1,12]");
  // Coefficients of C(z,2,2) = 1 + 4z B(z,2)^2 with B(z,2) = 1/(1 - 2z A(z)).
  std::vector<BigInt> a(k_max + 1), b(k_max + 1), c(k_max + 1);
  for (int i = 0; i <= k_max; ++i) a[i] = catalan(i);
  b[0] = 1;
  for (int i = 1; i <= k_max; ++i) {
    for (int j = 0; j < i; ++j) b[i] += 2 * a[j] * b[i - 1 - j];
  }
  c[0] = 1;
  for (int i = 1; i <= k_max; ++i) {
    for (int j = 0; j < i; ++j) c[i] += 4 * b[j] * b[i - 1 - j];
  }
  for (int k = 1; k <= k_max; ++k) {
    const BigInt four_k = BigInt(1) << (2 * k);
    if (c[k] != four_k) return false;
    BigInt weight = 0;
    Rational total231 = 0;
    for (const auto& pi : enumerate_class(kPat231, k)) {
      weight += BigInt(1) << static_cast<int>(lr_maxima(pi).size() + rl_maxima(pi).size());
      total231 += p231(pi);
    }
    if (weight != four_k || total231 != 1) return false;
    Rational total321 = 0;
    BigInt one_descent = 0;
    for (const auto& pi : enumerate_class(kPat321, k)) {
      total321 += p321(pi);
      one_descent += inverse_descent_count(pi) == 1;
    }
    if (total321 != 1 || one_descent != (BigInt(1) << k) - (k + 1)) return false;
  }
  return true;
}

std::map<Permutation, Rational> finite_from_order(const std::map<Permutation, Rational>& marginals,
                                                  double tolerance) {
  if (marginals.empty()) throw std::invalid_argument("finite_from_order: no marginals");
  const int n = marginals.begin()->first.size();
  if (n < 1 || n > 8) throw std::invalid_argument("finite_from_order: size must be in [1,8]");
  Rational total = 0;
  std::map<Permutation, Rational> out;
  for (const auto& [tau, prob] : marginals) {
    if (tau.size() != n) throw std::invalid_argument("finite_from_order: mixed pattern sizes");
    if (prob < 0) throw std::invalid_argument("finite_from_order: negative marginal");
    total += prob;
    out[inverse(tau)] = prob;
  }
  if (std::abs(to_double(total) - 1.0) > tolerance) {
    throw std::invalid_argument("finite_from_order: marginals sum to " + total.str() + ", not 1");
  }
  for (const auto& rho : all_permutations(n)) out.try_emplace(rho, 0);
  return out;
}

std::map<Permutation, Rational> exact_order_marginals_321(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("exact_order_marginals_321: n must be in [1,8]");
  std::map<Permutation, Rational> out;
  for (const auto& tau : all_permutations(n)) out[tau] = 0;
  const Rational weight = pow2(-n);
  // Labels on positions 0..n-1: "-" positions in order, then "+" positions in order.
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> chain;
    for (int plus = 0; plus < 2; ++plus) {
      for (int j = 0; j < n; ++j) {
        if (((mask >> j) & 1u) == static_cast<unsigned>(plus)) chain.push_back(j + 1);
      }
    }
    out[Permutation::from_trusted(std::move(chain))] += weight;
  }
  return out;
}

}  // namespace permlocal
