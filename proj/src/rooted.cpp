#include "permlocal/rooted.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace permlocal {

RootedPermutation::RootedPermutation(Permutation s, int i) : sigma(std::move(s)), root(i) {
  if (sigma.empty()) throw std::invalid_argument("rooted permutation needs size >= 1");
  if (root < 1 || root > sigma.size()) throw std::out_of_range("root index out of range");
}

FiniteOrder::FiniteOrder(int lo, std::vector<int> ranks) : lo_(lo), ranks_(std::move(ranks)) {
  if (ranks_.empty() || lo_ > 0 || hi() < 0) throw std::invalid_argument("order interval must contain 0");
  Permutation check(ranks_);  // throws unless ranks form a permutation
}

std::vector<int> FiniteOrder::chain() const {
  std::vector<int> out(ranks_.size());
  for (std::size_t j = 0; j < ranks_.size(); ++j) out[ranks_[j] - 1] = lo_ + static_cast<int>(j);
  return out;
}

FiniteOrder to_order(const RootedPermutation& rp) { return FiniteOrder(1 - rp.root, rp.sigma.word()); }

RootedPermutation from_order(const FiniteOrder& fo) {
  return RootedPermutation(Permutation::from_trusted(fo.ranks()), 1 - fo.lo());
}

RootedPermutation restrict(const RootedPermutation& rp, int h) {
  if (h < 1) throw std::invalid_argument("restrict: radius must be >= 1");
  const int a = std::max(1, rp.root - h);
  const int b = std::min(rp.size(), rp.root + h);
  return RootedPermutation(pat_interval(rp.sigma, a, b), rp.root - a + 1);
}

FiniteOrder restrict(const FiniteOrder& fo, int h) { return to_order(restrict(from_order(fo), h)); }

Rational local_distance(const RootedPermutation& x, const RootedPermutation& y) {
  const int reach = std::max({1, x.left_extent(), x.right_extent(), y.left_extent(), y.right_extent()});
  for (int h = 1; h <= reach; ++h) {
    if (restrict(x, h) != restrict(y, h)) return pow2(-(h - 1));
  }
  // Both windows cover everything at h = reach, so the orders coincide.
  return 0;
}

bool is_consistent(std::span<const RootedPermutation> family) {
  if (family.empty()) throw std::invalid_argument("is_consistent: empty family");
  for (std::size_t h = 1; h < family.size(); ++h) {
    if (restrict(family[h], static_cast<int>(h)) != family[h - 1]) return false;
  }
  return true;
}

FiniteOrder glue(std::span<const RootedPermutation> family) {
  if (!is_consistent(family)) throw std::invalid_argument("glue: inconsistent family");
  const auto& top = family.back();
  const int lo = 1 - top.root;
  const int hi = top.size() - top.root;
  // Union order: compare x, y inside the smallest restriction whose interval holds both.
  auto less = [&](int x, int y) {
    const int need = std::max({1, std::abs(x), std::abs(y)});
    const auto& rp = family[std::min<std::size_t>(need, family.size()) - 1];
    return rp.sigma(x + rp.root) < rp.sigma(y + rp.root);
  };
  std::vector<int> pos;
  for (int x = lo; x <= hi; ++x) pos.push_back(x);
  std::sort(pos.begin(), pos.end(), less);
  std::vector<int> ranks(pos.size());
  for (std::size_t r = 0; r < pos.size(); ++r) ranks[pos[r] - lo] = static_cast<int>(r) + 1;
  return FiniteOrder(lo, std::move(ranks));
}

bool in_shift_set(const FiniteOrder& fo, const Permutation& pi, int s) {
  const int k = pi.size();
  if (k == 0) return true;
  if (!fo.contains(1 + s) || !fo.contains(k + s)) return false;
  const auto pos = inverse(pi);
  for (int v = 1; v < k; ++v) {
    if (!fo.precedes(pos(v) + s, pos(v + 1) + s)) return false;
  }
  return true;
}

std::string to_string(const RootedPermutation& rp) { return to_string(rp.sigma) + "@" + std::to_string(rp.root); }

RootedPermutation parse_rooted(std::string_view text) {
  const auto at = text.rfind('@');
  if (at == std::string_view::npos) throw std::invalid_argument("rooted permutation needs '@<root>'");
  const std::string root_text(text.substr(at + 1));
  if (root_text.empty() || root_text.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("bad root index: '" + root_text + "'");
  }
  return RootedPermutation(parse_permutation(text.substr(0, at)), std::stoi(root_text));
}

}  // namespace permlocal
