#pragma once

#include <cstddef>
#include <optional>
#include <variant>

#include "permlocal/permutation.hpp"
#include "permlocal/random.hpp"
#include "permlocal/rooted.hpp"
#include "permlocal/trees.hpp"

namespace permlocal {

struct OffspringLaw {
  enum class Kind { geometric_half, binary_delta, size_biased_geometric_half };
  Kind kind = Kind::geometric_half;
  double delta = 0.0;

  static OffspringLaw geometric_half() { return {Kind::geometric_half, 0.0}; }
  static OffspringLaw binary(double delta);
  static OffspringLaw size_biased_geometric_half() { return {Kind::size_biased_geometric_half, 0.0}; }
  // Probability that a given potential child of a binary vertex is present.
  double child_probability() const { return (1.0 - delta) / 2.0; }
};

struct Overflow {
  friend bool operator==(const Overflow&, const Overflow&) = default;
};

inline constexpr std::size_t kDefaultVertexCap = std::size_t{1} << 24;

using GwTree = std::variant<OrderedTree, BinaryTree, Overflow>;

// Binary laws yield BinaryTree, the others OrderedTree; Overflow once more than
// vertex_cap vertices exist.
GwTree gw_tree(const OffspringLaw& law, RandomStream& rs, std::size_t vertex_cap = kDefaultVertexCap);

BinaryTree uniform_btree(int n, RandomStream& rs);
OrderedTree uniform_otree(int n_vertices, RandomStream& rs);
Permutation uniform_av231(int n, RandomStream& rs);
Permutation uniform_av321(int n, RandomStream& rs);

// Pointed fringe of height h of the local limit tree; nullopt on overflow.
std::optional<PointedTree> tstar_truncated(int h, RandomStream& rs, std::size_t vertex_cap = kDefaultVertexCap);

// P(empty) = 1/2, P(pi) = (1/2)(1/4)^{|pi|}; nullopt on overflow.
std::optional<Permutation> boltzmann_av231(RandomStream& rs, std::size_t vertex_cap = kDefaultVertexCap);

// (sigma, max, pi + k) rooted as before, and (pi, max, sigma + l) rooted at l + i + 1.
RootedPermutation star_right(const RootedPermutation& rp, const Permutation& pi);
RootedPermutation star_left(const RootedPermutation& rp, const Permutation& pi);

RootedPermutation limit231_window(int h, RandomStream& rs);
RootedPermutation limit321_window(int h, RandomStream& rs);

}  // namespace permlocal
