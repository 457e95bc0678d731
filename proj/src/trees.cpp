#include "permlocal/trees.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

namespace permlocal {

OrderedTree::OrderedTree() : children_(1), parent_(1, -1) {}

OrderedTree::OrderedTree(std::vector<std::vector<int>> children) : children_(std::move(children)) {
  const int n = size();
  if (n == 0) throw std::invalid_argument("ordered tree needs at least one vertex");
  parent_.assign(n, -2);
  parent_[0] = -1;
  int reached = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int c : children_[v]) {
      if (c <= 0 || c >= n || parent_[c] != -2) throw std::invalid_argument("children lists do not form a tree");
      parent_[c] = v;
      ++reached;
      stack.push_back(c);
    }
  }
  if (reached != n) throw std::invalid_argument("children lists do not form a tree");
}

int OrderedTree::depth(int v) const {
  int d = 0;
  while (parent_[v] >= 0) {
    v = parent_[v];
    ++d;
  }
  return d;
}

bool operator==(const OrderedTree& a, const OrderedTree& b) {
  return a.size() == b.size() && contour(a) == contour(b);
}

BinaryTree::BinaryTree() : left_{-1}, right_{-1}, parent_{-1} {}

BinaryTree::BinaryTree(std::vector<int> left, std::vector<int> right)
    : left_(std::move(left)), right_(std::move(right)) {
  const int n = size();
  if (n == 0 || static_cast<int>(right_.size()) != n) throw std::invalid_argument("bad binary tree arrays");
  parent_.assign(n, -2);
  parent_[0] = -1;
  int reached = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int c : {left_[v], right_[v]}) {
      if (c == -1) continue;
      if (c <= 0 || c >= n || parent_[c] != -2) throw std::invalid_argument("child arrays do not form a tree");
      parent_[c] = v;
      ++reached;
      stack.push_back(c);
    }
  }
  if (reached != n) throw std::invalid_argument("child arrays do not form a tree");
}

bool operator==(const BinaryTree& a, const BinaryTree& b) { return to_string(a) == to_string(b); }

std::vector<int> traverse(const OrderedTree& t, Traversal order) {
  std::vector<int> out;
  out.reserve(t.size());
  if (order == Traversal::in) throw std::invalid_argument("in-order traversal needs a binary tree");
  // (vertex, index of next child to visit)
  std::vector<std::pair<int, int>> stack{{0, 0}};
  if (order == Traversal::pre) out.push_back(0);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < t.out_degree(v)) {
      const int c = t.children(v)[next++];
      if (order == Traversal::pre) out.push_back(c);
      stack.push_back({c, 0});
    } else {
      if (order == Traversal::post) out.push_back(v);
      stack.pop_back();
    }
  }
  return out;
}

std::vector<int> traverse(const BinaryTree& t, Traversal order) {
  std::vector<int> out;
  out.reserve(t.size());
  // state 0: not entered, 1: left done, 2: right done
  std::vector<std::pair<int, int>> stack{{0, 0}};
  while (!stack.empty()) {
    auto& [v, state] = stack.back();
    if (state == 0) {
      if (order == Traversal::pre) out.push_back(v);
      state = 1;
      if (t.left(v) >= 0) stack.push_back({t.left(v), 0});
    } else if (state == 1) {
      if (order == Traversal::in) out.push_back(v);
      state = 2;
      if (t.right(v) >= 0) stack.push_back({t.right(v), 0});
    } else {
      if (order == Traversal::post) out.push_back(v);
      stack.pop_back();
    }
  }
  return out;
}

namespace {
template <class Tree>
std::vector<int> labels_from(const Tree& t, Traversal order, int start) {
  std::vector<int> label(t.size());
  const auto seq = traverse(t, order);
  for (std::size_t i = 0; i < seq.size(); ++i) label[seq[i]] = start + static_cast<int>(i);
  return label;
}
}  // namespace

std::vector<int> traversal_labels(const OrderedTree& t, Traversal order, int start) {
  return labels_from(t, order, start);
}
std::vector<int> traversal_labels(const BinaryTree& t, Traversal order, int start) {
  return labels_from(t, order, start);
}

DyckWord contour(const OrderedTree& t) {
  DyckWord w;
  w.reserve(2 * (t.size() - 1));
  std::vector<std::pair<int, int>> stack{{0, 0}};
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < t.out_degree(v)) {
      const int c = t.children(v)[next++];
      w += 'U';
      stack.push_back({c, 0});
    } else {
      stack.pop_back();
      if (!stack.empty()) w += 'D';
    }
  }
  return w;
}

bool is_dyck(std::string_view w) {
  long height = 0;
  for (char c : w) {
    if (c == 'U') {
      ++height;
    } else if (c == 'D') {
      if (--height < 0) return false;
    } else {
      return false;
    }
  }
  return height == 0;
}

OrderedTree tree_from_contour(std::string_view w) {
  if (!is_dyck(w)) throw std::invalid_argument("not a Dyck word: " + std::string(w));
  std::vector<std::vector<int>> children(1);
  std::vector<int> parent{-1};
  int cur = 0;
  for (char c : w) {
    if (c == 'U') {
      const int v = static_cast<int>(children.size());
      children.emplace_back();
      parent.push_back(cur);
      children[cur].push_back(v);
      cur = v;
    } else {
      cur = parent[cur];
    }
  }
  return OrderedTree(std::move(children));
}

LeafLabels leaf_labels(const OrderedTree& t) {
  const auto pre = traversal_labels(t, Traversal::pre, 0);
  const auto post = traversal_labels(t, Traversal::post, 1);
  LeafLabels out;
  for (int v : traverse(t, Traversal::pre)) {
    if (t.is_leaf(v)) {
      out.s.push_back(pre[v]);
      out.q.push_back(post[v]);
    }
  }
  return out;
}

bool contour_shape_check(std::string_view w, const std::vector<int>& labels) {
  if (labels.empty() || labels.front() != 1) return false;
  for (std::size_t j = 1; j < labels.size(); ++j) {
    if (labels[j] <= labels[j - 1]) return false;
  }
  std::vector<std::pair<char, int>> runs;
  for (char c : w) {
    if (!runs.empty() && runs.back().first == c) {
      ++runs.back().second;
    } else {
      runs.push_back({c, 1});
    }
  }
  const std::size_t m = labels.size();
  if (runs.size() != 2 * m || runs.front().first != 'U') return false;
  for (std::size_t j = 0; j + 1 < m; ++j) {
    if (runs[2 * j + 1].second != labels[j + 1] - labels[j]) return false;
  }
  return true;
}

OrderedTree fringe(const OrderedTree& t, int v) {
  if (v < 0 || v >= t.size()) throw std::out_of_range("fringe: vertex not in tree");
  std::vector<int> newid(t.size(), -1);
  std::vector<int> order{v};
  newid[v] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int c : t.children(order[i])) {
      newid[c] = static_cast<int>(order.size());
      order.push_back(c);
    }
  }
  std::vector<std::vector<int>> children(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int c : t.children(order[i])) children[i].push_back(newid[c]);
  }
  return OrderedTree(std::move(children));
}

std::optional<PointedTree> pointed_fringe(const OrderedTree& t, int v, int h) {
  if (v < 0 || v >= t.size()) throw std::out_of_range("pointed_fringe: vertex not in tree");
  // Path from v up to its h-th ancestor, as child indices.
  std::vector<int> steps;
  int a = v;
  for (int i = 0; i < h; ++i) {
    const int p = t.parent(a);
    if (p < 0) return std::nullopt;
    const auto& ch = t.children(p);
    steps.push_back(static_cast<int>(std::find(ch.begin(), ch.end(), a) - ch.begin()));
    a = p;
  }
  PointedTree out{fringe(t, a), 0};
  int m = 0;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) m = out.tree.children(m)[*it];
  out.marked = m;
  return out;
}

bool operator==(const PointedTree& a, const PointedTree& b) {
  if (!(a.tree == b.tree)) return false;
  const auto la = traversal_labels(a.tree, Traversal::pre, 0);
  const auto lb = traversal_labels(b.tree, Traversal::pre, 0);
  return la[a.marked] == lb[b.marked];
}

std::vector<int> left_branch(const BinaryTree& t) {
  std::vector<int> out;
  for (int v = 0; v >= 0; v = t.left(v)) out.push_back(v);
  return out;
}

std::vector<int> right_branch(const BinaryTree& t) {
  std::vector<int> out;
  for (int v = 0; v >= 0; v = t.right(v)) out.push_back(v);
  return out;
}

namespace {
void dyck_words(int ups, int downs, std::string& cur, std::vector<std::string>& out) {
  if (ups == 0 && downs == 0) {
    out.push_back(cur);
    return;
  }
  if (ups > 0) {
    cur.push_back('U');
    dyck_words(ups - 1, downs, cur, out);
    cur.pop_back();
  }
  if (downs > ups) {
    cur.push_back('D');
    dyck_words(ups, downs - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::string> binary_codes(int n) {
  if (n == 0) return {"."};
  std::vector<std::string> out;
  for (int k = 0; k < n; ++k) {
    for (const auto& l : binary_codes(k)) {
      for (const auto& r : binary_codes(n - 1 - k)) out.push_back("(" + l + r + ")");
    }
  }
  return out;
}
}  // namespace

std::vector<OrderedTree> all_ordered_trees(int n_vertices) {
  if (n_vertices < 1) throw std::invalid_argument("all_ordered_trees: need >= 1 vertex");
  std::vector<std::string> words;
  std::string cur;
  dyck_words(n_vertices - 1, n_vertices - 1, cur, words);
  std::vector<OrderedTree> out;
  for (const auto& w : words) out.push_back(tree_from_contour(w));
  return out;
}

std::vector<BinaryTree> all_binary_trees(int n_vertices) {
  if (n_vertices < 1) throw std::invalid_argument("all_binary_trees: need >= 1 vertex");
  std::vector<BinaryTree> out;
  for (const auto& code : binary_codes(n_vertices)) out.push_back(parse_binary_tree(code));
  return out;
}

std::string to_string(const BinaryTree& t) {
  std::string s;
  std::function<void(int)> rec = [&](int v) {
    if (v < 0) {
      s += '.';
      return;
    }
    s += '(';
    rec(t.left(v));
    rec(t.right(v));
    s += ')';
  };
  rec(0);
  return s;
}

BinaryTree parse_binary_tree(std::string_view text) {
  std::vector<int> left, right;
  std::size_t pos = 0;
  auto bad = [&] { return std::invalid_argument("bad binary tree text: " + std::string(text)); };
  std::function<int()> rec = [&]() -> int {
    if (pos >= text.size()) throw bad();
    if (text[pos] == '.') {
      ++pos;
      return -1;
    }
    if (text[pos] != '(') throw bad();
    ++pos;
    const int v = static_cast<int>(left.size());
    left.push_back(-1);
    right.push_back(-1);
    const int l = rec();
    left[v] = l;
    const int r = rec();
    right[v] = r;
    if (pos >= text.size() || text[pos] != ')') throw bad();
    ++pos;
    return v;
  };
  if (rec() != 0 || pos != text.size()) throw bad();
  return BinaryTree(std::move(left), std::move(right));
}

}  // namespace permlocal
