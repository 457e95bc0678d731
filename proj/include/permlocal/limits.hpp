#pragma once

#include <map>
#include <vector>

#include "permlocal/permutation.hpp"
#include "permlocal/rational_poly.hpp"

namespace permlocal {

Rational p231(const Permutation& pi);
Rational p321(const Permutation& pi);

// p^{|T|-1} (1-p)^{|T|+1}: probability that the binary GW tree equals a fixed T.
RationalPoly binary_tree_probability(int size);

// Pattern probabilities of the binary GW tree with child probability p: at the
// joint (whole window), at the beginning, and at the end of the in-order word.
// One instance memoizes sub-patterns; it is not safe for concurrent use.
class SymbolicPatterns {
 public:
  const RationalPoly& joint(const Permutation& pi);
  const RationalPoly& begin(const Permutation& pi);
  const RationalPoly& end(const Permutation& pi);

 private:
  std::map<Permutation, RationalPoly> joint_, begin_, end_;
};

RationalPoly symbolic_pat_j(const Permutation& pi);
RationalPoly symbolic_pat_b(const Permutation& pi);
RationalPoly symbolic_pat_e(const Permutation& pi);
Rational boundary_limit_b(const Permutation& pi);
Rational boundary_limit_e(const Permutation& pi);

// Distance from a maximum index to the next maximum of the same kind.
int max_distance(const Permutation& pi, int j);

std::vector<Permutation> enumerate_class(const Permutation& rho, int n);
BigInt catalan(int n);

bool genfun_normalization_check(int k_max);

// marginals[tau] = P(O(tau)) over tau in S^n; returns P(sigma = rho) = marginals[rho^{-1}].
std::map<Permutation, Rational> finite_from_order(const std::map<Permutation, Rational>& marginals,
                                                  double tolerance);
// Exact P(O(tau)) for the 321 limit order, all tau in S^n.
std::map<Permutation, Rational> exact_order_marginals_321(int n);

}  // namespace permlocal
