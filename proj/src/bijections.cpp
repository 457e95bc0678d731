#include "permlocal/bijections.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace permlocal {

namespace {
const Permutation kPat231{2, 3, 1};
const Permutation kPat321{3, 2, 1};
}  // namespace

BinaryTree perm_to_btree(const Permutation& sigma) {
  if (sigma.empty()) throw std::invalid_argument("perm_to_btree: empty permutation");
  if (!avoids(sigma, kPat231)) throw std::invalid_argument("perm_to_btree: permutation contains 231");
  // Max-rooted Cartesian tree; vertex id = position - 1, then relabeled so the root is 0.
  const int n = sigma.size();
  std::vector<int> left(n, -1), right(n, -1), stack;
  for (int i = 0; i < n; ++i) {
    int last = -1;
    while (!stack.empty() && sigma(stack.back() + 1) < sigma(i + 1)) {
      last = stack.back();
      stack.pop_back();
    }
    left[i] = last;
    if (!stack.empty()) right[stack.back()] = i;
    stack.push_back(i);
  }
  const int root = stack.front();
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  std::swap(id[0], id[root]);
  std::vector<int> l2(n, -1), r2(n, -1);
  for (int i = 0; i < n; ++i) {
    l2[id[i]] = left[i] < 0 ? -1 : id[left[i]];
    r2[id[i]] = right[i] < 0 ? -1 : id[right[i]];
  }
  return BinaryTree(std::move(l2), std::move(r2));
}

Permutation btree_to_perm(const BinaryTree& t) {
  const auto post = traversal_labels(t, Traversal::post, 1);
  std::vector<int> w;
  w.reserve(t.size());
  for (int v : traverse(t, Traversal::in)) w.push_back(post[v]);
  return Permutation::from_trusted(std::move(w));
}

OrderedTree perm_to_otree(const Permutation& sigma) {
  if (!avoids(sigma, kPat321)) throw std::invalid_argument("perm_to_otree: permutation contains 321");
  const int n = sigma.size();
  if (n == 0) return OrderedTree();
  // Leaves sit at q_i = E+ positions with pre-order labels s_i = sigma(q_i); between
  // consecutive leaves the contour climbs s_{i+1}-s_i and descends q_{i+1}-q_i.
  const auto q = e_plus(sigma);
  std::string w;
  w.reserve(2 * n);
  int prev_s = 0;
  for (std::size_t j = 0; j < q.size(); ++j) {
    const int s = sigma(q[j]);
    const int next_q = j + 1 < q.size() ? q[j + 1] : n + 1;
    w.append(s - prev_s, 'U');
    w.append(next_q - q[j], 'D');
    prev_s = s;
  }
  return tree_from_contour(w);
}

Permutation otree_to_perm(const OrderedTree& t) {
  const int n = t.size() - 1;
  const auto lab = leaf_labels(t);
  if (n == 0) return {};
  std::vector<int> w(n, 0);
  std::vector<char> used(n + 1, 0);
  for (std::size_t j = 0; j < lab.s.size(); ++j) {
    w[lab.q[j] - 1] = lab.s[j];
    used[lab.s[j]] = 1;
  }
  int next = 1;
  for (int i = 0; i < n; ++i) {
    if (w[i] != 0) continue;
    while (used[next]) ++next;
    w[i] = next++;
  }
  return Permutation::from_trusted(std::move(w));
}

std::vector<int> e_plus(const Permutation& sigma) {
  std::vector<int> out;
  for (int i = 1; i <= sigma.size(); ++i) {
    if (sigma(i) >= i) out.push_back(i);
  }
  return out;
}

std::vector<int> e_minus(const Permutation& sigma) {
  std::vector<int> out;
  for (int i = 1; i <= sigma.size(); ++i) {
    if (sigma(i) < i) out.push_back(i);
  }
  return out;
}

std::vector<int> window_set(const Permutation& sigma, int i, int k) {
  if (i < 1 || i > sigma.size()) throw std::out_of_range("window_set: root out of range");
  if (k < 1) throw std::invalid_argument("window_set: k must be >= 1");
  std::vector<int> out;
  for (int x = -k; x <= k; ++x) {
    const int j = i + x;
    if (j >= 1 && j <= sigma.size() && sigma(j) >= j) out.push_back(x);
  }
  return out;
}

bool has_separating_line(const Permutation& sigma, int i, int k) {
  if (i < 1 || i > sigma.size()) throw std::out_of_range("has_separating_line: root out of range");
  if (k < 1) throw std::invalid_argument("has_separating_line: k must be >= 1");
  const int a = std::max(1, i - k);
  const int b = std::min(sigma.size(), i + k);
  int min_plus = -1, max_minus = -1;
  for (int j = a; j <= b; ++j) {
    if (sigma(j) >= j) {
      if (min_plus < 0) min_plus = j;
    } else {
      max_minus = j;
    }
  }
  if (min_plus < 0 || max_minus < 0) return true;
  return sigma(min_plus) > sigma(max_minus);
}

}  // namespace permlocal
