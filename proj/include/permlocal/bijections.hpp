#pragma once

#include <vector>

#include "permlocal/permutation.hpp"
#include "permlocal/trees.hpp"

namespace permlocal {

// Av(231) <-> binary trees: root is the maximum, subtrees carry sigma_L and std(sigma_R).
BinaryTree perm_to_btree(const Permutation& sigma);
Permutation btree_to_perm(const BinaryTree& t);

// Av(321) <-> ordered trees with one extra vertex, through leaf labels.
OrderedTree perm_to_otree(const Permutation& sigma);
Permutation otree_to_perm(const OrderedTree& t);

std::vector<int> e_plus(const Permutation& sigma);   // {i : sigma_i >= i}
std::vector<int> e_minus(const Permutation& sigma);  // {i : sigma_i < i}

// Offsets x in [-k,k] with i+x in E+.
std::vector<int> window_set(const Permutation& sigma, int i, int k);
bool has_separating_line(const Permutation& sigma, int i, int k);

}  // namespace permlocal
