#include "permlocal/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace permlocal {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  std::vector<char> seen(n + 1, 0);
  for (int v : word_) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("not a permutation of 1..n");
    }
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return from_trusted(std::move(w));
}

Permutation Permutation::from_trusted(std::vector<int> word) {
  Permutation p;
  p.word_ = std::move(word);
  return p;
}

template <class T>
Permutation standardize(std::span<const T> values) {
  const int n = static_cast<int>(values.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
  std::vector<int> w(n);
  for (int r = 0; r < n; ++r) {
    if (r > 0 && !(values[order[r - 1]] < values[order[r]])) {
      throw std::invalid_argument("standardize: duplicate values");
    }
    w[order[r]] = r + 1;
  }
  return Permutation::from_trusted(std::move(w));
}

template Permutation standardize<int>(std::span<const int>);
template Permutation standardize<long long>(std::span<const long long>);
template Permutation standardize<double>(std::span<const double>);

Permutation standardize(std::initializer_list<long long> values) {
  return standardize(std::span<const long long>(values.begin(), values.size()));
}

Permutation pat(const Permutation& sigma, std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  std::vector<int> vals;
  vals.reserve(indices.size());
  for (int i : indices) {
    if (i < 1 || i > sigma.size()) throw std::out_of_range("pat: index out of range");
    vals.push_back(sigma(i));
  }
  return standardize(std::span<const int>(vals));
}

Permutation pat_interval(const Permutation& sigma, int a, int b) {
  if (a > b) return {};
  if (a < 1 || b > sigma.size()) throw std::out_of_range("pat_interval: index out of range");
  const auto& w = sigma.word();
  return standardize(std::span<const int>(w.data() + a - 1, b - a + 1));
}

std::int64_t c_occ(const Permutation& pi, const Permutation& sigma) {
  const int k = pi.size();
  const int n = sigma.size();
  if (k == 0) throw std::invalid_argument("c_occ: empty pattern");
  if (k > n) return 0;
  // Offsets of pattern values 1..k; a window matches iff sigma increases along them.
  std::vector<int> pos(k);
  for (int j = 0; j < k; ++j) pos[pi.word()[j] - 1] = j;
  const int* s = sigma.word().data();
  std::int64_t count = 0;
  for (int start = 0; start + k <= n; ++start) {
    bool ok = true;
    for (int v = 1; v < k && ok; ++v) ok = s[start + pos[v - 1]] < s[start + pos[v]];
    count += ok;
  }
  return count;
}

Rational c_occ_proportion(const Permutation& pi, const Permutation& sigma) {
  if (sigma.empty()) throw std::invalid_argument("c_occ_proportion: empty host");
  return Rational(c_occ(pi, sigma), sigma.size());
}

PatternStats pattern_stats(const Permutation& pi, const Permutation& sigma) {
  PatternStats st;
  st.pattern = pi;
  st.count = c_occ(pi, sigma);
  st.proportion = Rational(st.count, sigma.size());
  return st;
}

std::map<Permutation, std::int64_t> window_pattern_counts(const Permutation& sigma, int k) {
  std::map<Permutation, std::int64_t> out;
  const int n = sigma.size();
  if (k < 1) throw std::invalid_argument("window_pattern_counts: k < 1");
  for (int a = 1; a + k - 1 <= n; ++a) ++out[pat_interval(sigma, a, a + k - 1)];
  return out;
}

namespace {

bool contains_231(const std::vector<int>& w) {
  int low = 0;
  std::vector<int> stack;
  for (int x : w) {
    if (x < low) return true;
    while (!stack.empty() && stack.back() < x) {
      low = stack.back();
      stack.pop_back();
    }
    stack.push_back(x);
  }
  return false;
}

bool contains_123(const std::vector<int>& w) {
  int first = INT32_MAX, second = INT32_MAX;
  for (int x : w) {
    if (x > second) return true;
    if (x < first) {
      first = x;
    } else if (x > first && x < second) {
      second = x;
    }
  }
  return false;
}

bool contains_by_search(const std::vector<int>& s, const std::vector<int>& r) {
  const int n = static_cast<int>(s.size());
  const int k = static_cast<int>(r.size());
  std::vector<int> chosen;
  chosen.reserve(k);
  // Depth-first over increasing position sets, pruning on relative order.
  auto rec = [&](auto&& self, int from) -> bool {
    const int j = static_cast<int>(chosen.size());
    if (j == k) return true;
    for (int p = from; p <= n - (k - j); ++p) {
      bool ok = true;
      for (int t = 0; t < j && ok; ++t) ok = (s[chosen[t]] < s[p]) == (r[t] < r[j]);
      if (!ok) continue;
      chosen.push_back(p);
      if (self(self, p + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

bool avoids(const Permutation& sigma, const Permutation& rho) {
  const int k = rho.size();
  if (k == 0) throw std::invalid_argument("avoids: empty pattern");
  if (k > sigma.size()) return true;
  const auto& r = rho.word();
  if (k == 3) {
    if (r == std::vector<int>{2, 3, 1}) return !contains_231(sigma.word());
    if (r == std::vector<int>{1, 3, 2}) return !contains_231(reverse(sigma).word());
    if (r == std::vector<int>{2, 1, 3}) return !contains_231(complement(sigma).word());
    if (r == std::vector<int>{3, 1, 2}) return !contains_231(complement(reverse(sigma)).word());
    if (r == std::vector<int>{1, 2, 3}) return !contains_123(sigma.word());
    return !contains_123(complement(sigma).word());
  }
  if (k <= 2 || sigma.size() <= 20) return !contains_by_search(sigma.word(), r);
  throw std::invalid_argument("avoids: patterns of size >= 4 need a host of size <= 20");
}

std::vector<int> lr_maxima(const Permutation& sigma) {
  std::vector<int> out;
  int best = 0;
  for (int i = 1; i <= sigma.size(); ++i) {
    if (sigma(i) > best) {
      best = sigma(i);
      out.push_back(i);
    }
  }
  return out;
}

std::vector<int> rl_maxima(const Permutation& sigma) {
  std::vector<int> out;
  int best = 0;
  for (int i = sigma.size(); i >= 1; --i) {
    if (sigma(i) > best) {
      best = sigma(i);
      out.push_back(i);
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<int> maxima(const Permutation& sigma) {
  auto lr = lr_maxima(sigma);
  auto rl = rl_maxima(sigma);
  std::vector<int> out;
  std::set_union(lr.begin(), lr.end(), rl.begin(), rl.end(), std::back_inserter(out));
  return out;
}

Permutation inverse(const Permutation& sigma) {
  std::vector<int> w(sigma.size());
  for (int i = 1; i <= sigma.size(); ++i) w[sigma(i) - 1] = i;
  return Permutation::from_trusted(std::move(w));
}

Permutation reverse(const Permutation& sigma) {
  std::vector<int> w(sigma.word().rbegin(), sigma.word().rend());
  return Permutation::from_trusted(std::move(w));
}

Permutation complement(const Permutation& sigma) {
  std::vector<int> w = sigma.word();
  for (int& v : w) v = sigma.size() + 1 - v;
  return Permutation::from_trusted(std::move(w));
}

Permutation direct_sum(const Permutation& pi, const Permutation& sigma) {
  std::vector<int> w = pi.word();
  for (int v : sigma.word()) w.push_back(v + pi.size());
  return Permutation::from_trusted(std::move(w));
}

Permutation star_insert(const Permutation& pi, int m) {
  const int k = pi.size();
  if (m < 1 || m > k + 1) throw std::out_of_range("star_insert: m out of range");
  std::vector<int> w;
  w.reserve(k + 1);
  for (int v : pi.word()) w.push_back(v >= m ? v + 1 : v);
  w.push_back(m);
  return Permutation::from_trusted(std::move(w));
}

int indmax(const Permutation& sigma) {
  if (sigma.empty()) throw std::invalid_argument("indmax: empty permutation");
  const auto& w = sigma.word();
  return static_cast<int>(std::max_element(w.begin(), w.end()) - w.begin()) + 1;
}

MaxSplit split_at_max(const Permutation& sigma) {
  const int m = indmax(sigma);
  const auto& w = sigma.word();
  return {std::vector<int>(w.begin(), w.begin() + m - 1), std::vector<int>(w.begin() + m, w.end())};
}

std::pair<Permutation, Permutation> split_at_max_std(const Permutation& sigma) {
  auto sp = split_at_max(sigma);
  return {standardize(std::span<const int>(sp.left)), standardize(std::span<const int>(sp.right))};
}

int inverse_descent_count(const Permutation& sigma) {
  // i+1 appears before i in sigma
  const auto inv = inverse(sigma);
  int c = 0;
  for (int v = 1; v < sigma.size(); ++v) c += inv(v) > inv(v + 1);
  return c;
}

std::string to_string(const Permutation& sigma) {
  if (sigma.empty()) return "-";
  std::string s;
  for (int i = 1; i <= sigma.size(); ++i) {
    if (i > 1) s += ',';
    s += std::to_string(sigma(i));
  }
  return s;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) tokens.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  auto bad = [&] { return std::invalid_argument("bad permutation text: '" + std::string(text) + "'"); };
  if (tokens.empty()) throw bad();
  if (tokens.size() == 1 && tokens[0] == "-") return {};
  std::vector<int> w;
  if (tokens.size() == 1 && tokens[0].size() > 1) {
    for (char c : tokens[0]) {
      if (c < '1' || c > '9') throw bad();
      w.push_back(c - '0');
    }
  } else {
    for (const auto& tok : tokens) {
      if (tok.size() > 9 || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw bad();
      }
      w.push_back(std::stoi(tok));
    }
  }
  return Permutation(std::move(w));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    out.push_back(Permutation::from_trusted(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace permlocal
