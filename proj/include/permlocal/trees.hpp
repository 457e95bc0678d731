#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace permlocal {

enum class Traversal { pre, post, in };

// Plane tree with dense vertex ids; vertex 0 is the root.
class OrderedTree {
 public:
  OrderedTree();  // single vertex
  explicit OrderedTree(std::vector<std::vector<int>> children);

  int size() const { return static_cast<int>(children_.size()); }
  int root() const { return 0; }
  const std::vector<int>& children(int v) const { return children_[v]; }
  int out_degree(int v) const { return static_cast<int>(children_[v].size()); }
  int parent(int v) const { return parent_[v]; }
  int depth(int v) const;
  bool is_leaf(int v) const { return children_[v].empty(); }

  friend bool operator==(const OrderedTree& a, const OrderedTree& b);

 private:
  std::vector<std::vector<int>> children_;
  std::vector<int> parent_;
};

// Binary tree with dense vertex ids; vertex 0 is the root. A missing child is -1.
class BinaryTree {
 public:
  BinaryTree();  // single vertex
  BinaryTree(std::vector<int> left, std::vector<int> right);

  int size() const { return static_cast<int>(left_.size()); }
  int root() const { return 0; }
  int left(int v) const { return left_[v]; }
  int right(int v) const { return right_[v]; }
  int parent(int v) const { return parent_[v]; }

  friend bool operator==(const BinaryTree& a, const BinaryTree& b);

 private:
  std::vector<int> left_, right_, parent_;
};

struct PointedTree {
  OrderedTree tree;
  int marked = 0;
};
bool operator==(const PointedTree& a, const PointedTree& b);

using DyckWord = std::string;

std::vector<int> traverse(const OrderedTree& t, Traversal order);
std::vector<int> traverse(const BinaryTree& t, Traversal order);
// label[v] = position of v in the traversal, counting from `start`.
std::vector<int> traversal_labels(const OrderedTree& t, Traversal order, int start);
std::vector<int> traversal_labels(const BinaryTree& t, Traversal order, int start);

DyckWord contour(const OrderedTree& t);
OrderedTree tree_from_contour(std::string_view w);
bool is_dyck(std::string_view w);

struct LeafLabels {
  std::vector<int> s;  // pre-order labels from 0
  std::vector<int> q;  // post-order labels from 1
};
LeafLabels leaf_labels(const OrderedTree& t);

// A = {x_1 < ... < x_m}, x_1 = 1.
bool contour_shape_check(std::string_view w, const std::vector<int>& labels);

OrderedTree fringe(const OrderedTree& t, int v);
std::optional<PointedTree> pointed_fringe(const OrderedTree& t, int v, int h);

// Vertices 1^j (left branch) and 2^j (right branch) from the root, root included.
std::vector<int> left_branch(const BinaryTree& t);
std::vector<int> right_branch(const BinaryTree& t);

std::vector<OrderedTree> all_ordered_trees(int n_vertices);
std::vector<BinaryTree> all_binary_trees(int n_vertices);

// Binary trees: "." is empty, "(LR)" a vertex with subtrees L and R.
std::string to_string(const BinaryTree& t);
BinaryTree parse_binary_tree(std::string_view text);

}  // namespace permlocal
