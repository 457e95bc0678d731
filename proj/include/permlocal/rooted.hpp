#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permlocal/permutation.hpp"

namespace permlocal {

struct RootedPermutation {
  Permutation sigma;
  int root = 1;

  RootedPermutation() : sigma(Permutation::identity(1)) {}
  RootedPermutation(Permutation s, int i);

  int size() const { return sigma.size(); }
  int left_extent() const { return root - 1; }
  int right_extent() const { return sigma.size() - root; }

  friend bool operator==(const RootedPermutation&, const RootedPermutation&) = default;
  friend auto operator<=>(const RootedPermutation&, const RootedPermutation&) = default;
};

// Total order on the interval [lo, hi] (lo <= 0 <= hi); rank(x) is 1-based.
class FiniteOrder {
 public:
  FiniteOrder(int lo, std::vector<int> ranks);

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
  bool contains(int x) const { return x >= lo() && x <= hi(); }
  int rank(int x) const { return ranks_[x - lo_]; }
  bool precedes(int x, int y) const { return rank(x) <= rank(y); }  // x ≼ y
  const std::vector<int>& ranks() const { return ranks_; }
  // Positions listed from smallest to largest.
  std::vector<int> chain() const;

  friend bool operator==(const FiniteOrder&, const FiniteOrder&) = default;

 private:
  int lo_;
  std::vector<int> ranks_;
};

FiniteOrder to_order(const RootedPermutation& rp);
RootedPermutation from_order(const FiniteOrder& fo);

RootedPermutation restrict(const RootedPermutation& rp, int h);
FiniteOrder restrict(const FiniteOrder& fo, int h);

Rational local_distance(const RootedPermutation& x, const RootedPermutation& y);

// family[h-1] is the candidate restriction at radius h.
bool is_consistent(std::span<const RootedPermutation> family);
FiniteOrder glue(std::span<const RootedPermutation> family);

bool in_shift_set(const FiniteOrder& fo, const Permutation& pi, int s);

std::string to_string(const RootedPermutation& rp);
RootedPermutation parse_rooted(std::string_view text);

}  // namespace permlocal
