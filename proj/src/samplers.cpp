#include "permlocal/samplers.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "permlocal/bijections.hpp"

namespace permlocal {

OffspringLaw OffspringLaw::binary(double delta) {
  if (!(delta >= 0.0 && delta < 1.0)) throw std::invalid_argument("binary offspring law needs delta in [0,1)");
  return {Kind::binary_delta, delta};
}

namespace {

int draw_offspring(const OffspringLaw& law, RandomStream& rs) {
  if (law.kind == OffspringLaw::Kind::geometric_half) return rs.geometric_half();
  // k·2^{-k-1} on k >= 1 is 1 + a sum of two independent Geom(1/2) counts.
  return 1 + rs.geometric_half() + rs.geometric_half();
}

std::optional<BinaryTree> gw_binary(double p, RandomStream& rs, std::size_t cap) {
  std::vector<int> left{-1}, right{-1};
  for (std::size_t v = 0; v < left.size(); ++v) {
    for (int side = 0; side < 2; ++side) {
      if (!rs.bernoulli(p)) continue;
      if (left.size() >= cap) return std::nullopt;
      const int c = static_cast<int>(left.size());
      (side == 0 ? left : right)[v] = c;
      left.push_back(-1);
      right.push_back(-1);
    }
  }
  return BinaryTree(std::move(left), std::move(right));
}

// Breadth-first growth below every vertex in `frontier`; returns false on overflow.
bool grow_ordered(std::vector<std::vector<int>>& children, std::vector<int> frontier, const OffspringLaw& law,
                  RandomStream& rs, std::size_t cap) {
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    const int k = draw_offspring(law, rs);
    if (children.size() + k > cap) return false;
    for (int j = 0; j < k; ++j) {
      const int c = static_cast<int>(children.size());
      children.emplace_back();
      children[frontier[i]].push_back(c);
      frontier.push_back(c);
    }
  }
  return true;
}

}  // namespace

GwTree gw_tree(const OffspringLaw& law, RandomStream& rs, std::size_t vertex_cap) {
  if (vertex_cap < 1) throw std::invalid_argument("gw_tree: vertex_cap must be >= 1");
  if (law.kind == OffspringLaw::Kind::binary_delta) {
    auto t = gw_binary(law.child_probability(), rs, vertex_cap);
    if (!t) return Overflow{};
    return *std::move(t);
  }
  std::vector<std::vector<int>> children(1);
  if (!grow_ordered(children, {0}, law, rs, vertex_cap)) return Overflow{};
  return OrderedTree(std::move(children));
}

BinaryTree uniform_btree(int n, RandomStream& rs) {
  if (n < 1) throw std::invalid_argument("uniform_btree: n must be >= 1");
  // Rémy: grow a uniform full binary tree with n internal vertices.
  const int total = 2 * n + 1;
  std::vector<int> parent(total, -1), left(total, -1), right(total, -1);
  int root = 0, count = 1;
  for (int step = 0; step < n; ++step) {
    const int x = static_cast<int>(rs.below(count));
    const int y = count, z = count + 1;
    const int px = parent[x];
    parent[y] = px;
    if (px < 0) {
      root = y;
    } else if (left[px] == x) {
      left[px] = y;
    } else {
      right[px] = y;
    }
    if (rs.coin()) {
      left[y] = x;
      right[y] = z;
    } else {
      left[y] = z;
      right[y] = x;
    }
    parent[x] = parent[z] = y;
    count += 2;
  }
  // Keep internal vertices only, renumbered breadth-first from the root.
  auto internal = [&](int v) { return v >= 0 && left[v] >= 0; };
  std::vector<int> id(total, -1), order{root};
  id[root] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int c : {left[order[i]], right[order[i]]}) {
      if (internal(c)) {
        id[c] = static_cast<int>(order.size());
        order.push_back(c);
      }
    }
  }
  std::vector<int> bl(n, -1), br(n, -1);
  for (int v : order) {
    if (internal(left[v])) bl[id[v]] = id[left[v]];
    if (internal(right[v])) br[id[v]] = id[right[v]];
  }
  return BinaryTree(std::move(bl), std::move(br));
}

OrderedTree uniform_otree(int n_vertices, RandomStream& rs) {
  if (n_vertices < 1) throw std::invalid_argument("uniform_otree: need >= 1 vertex");
  const int n = n_vertices - 1;
  // Cycle lemma: of the 2n+1 rotations of a word with n U's and n+1 D's exactly one
  // keeps every proper prefix nonnegative; drop its final D.
  std::string w(n, 'U');
  w.append(n + 1, 'D');
  std::shuffle(w.begin(), w.end(), rs.engine());
  int sum = 0, best = 1, best_at = 0;
  for (int j = 0; j < 2 * n + 1; ++j) {
    sum += w[j] == 'U' ? 1 : -1;
    if (sum < best) {
      best = sum;
      best_at = j;
    }
  }
  std::rotate(w.begin(), w.begin() + best_at + 1, w.end());
  w.pop_back();
  return tree_from_contour(w);
}

Permutation uniform_av231(int n, RandomStream& rs) { return btree_to_perm(uniform_btree(n, rs)); }

Permutation uniform_av321(int n, RandomStream& rs) {
  if (n < 1) throw std::invalid_argument("uniform_av321: n must be >= 1");
  return otree_to_perm(uniform_otree(n + 1, rs));
}

std::optional<PointedTree> tstar_truncated(int h, RandomStream& rs, std::size_t vertex_cap) {
  if (h < 0) throw std::invalid_argument("tstar_truncated: height must be >= 0");
  const auto geo = OffspringLaw::geometric_half();
  const auto biased = OffspringLaw::size_biased_geometric_half();
  std::vector<std::vector<int>> children(1);
  std::vector<int> hanging;
  int spine = 0;
  for (int level = h; level >= 1; --level) {
    const int k = draw_offspring(biased, rs);
    if (children.size() + k > vertex_cap) return std::nullopt;
    const int pick = static_cast<int>(rs.below(k));
    int next = -1;
    for (int j = 0; j < k; ++j) {
      const int c = static_cast<int>(children.size());
      children.emplace_back();
      children[spine].push_back(c);
      if (j == pick) {
        next = c;
      } else {
        hanging.push_back(c);
      }
    }
    spine = next;
  }
  hanging.push_back(spine);
  if (!grow_ordered(children, hanging, geo, rs, vertex_cap)) return std::nullopt;
  return PointedTree{OrderedTree(std::move(children)), spine};
}

std::optional<Permutation> boltzmann_av231(RandomStream& rs, std::size_t vertex_cap) {
  if (rs.coin()) return Permutation{};
  auto t = gw_binary(0.5, rs, vertex_cap);
  if (!t) return std::nullopt;
  return btree_to_perm(*t);
}

RootedPermutation star_right(const RootedPermutation& rp, const Permutation& pi) {
  const int k = rp.size(), l = pi.size();
  std::vector<int> w = rp.sigma.word();
  w.push_back(k + l + 1);
  for (int v : pi.word()) w.push_back(v + k);
  return RootedPermutation(Permutation::from_trusted(std::move(w)), rp.root);
}

RootedPermutation star_left(const RootedPermutation& rp, const Permutation& pi) {
  const int k = rp.size(), l = pi.size();
  std::vector<int> w = pi.word();
  w.push_back(k + l + 1);
  for (int v : rp.sigma.word()) w.push_back(v + l);
  return RootedPermutation(Permutation::from_trusted(std::move(w)), l + rp.root + 1);
}

namespace {

// Binary Galton-Watson tree (each child present with probability 1/2) revealed
// only where the in-order walk needs it.
class LazyTree {
 public:
  explicit LazyTree(RandomStream& rs) : rs_(rs) { add(-1); }

  int child(int v, int side) {
    if (kids_[v][side] == kUnknown) {
      const int c = rs_.coin() ? add(v) : kNone;
      kids_[v][side] = c;
    }
    return kids_[v][side];
  }

  // First (from_left) or last `m` in-order vertices of the subtree at r, listed
  // outward from that end.
  std::vector<int> walk(int r, int m, bool from_left) {
    std::vector<int> out;
    if (r == kNone || m <= 0) return out;
    const int near = from_left ? 0 : 1;
    const int far = 1 - near;
    int v = descend(r, near);
    while (v != kNone && static_cast<int>(out.size()) < m) {
      out.push_back(v);
      if (static_cast<int>(out.size()) == m) break;
      if (child(v, far) != kNone) {
        v = descend(child(v, far), near);
      } else {
        int next = kNone;
        while (v != r) {
          const int p = parent_[v];
          if (kids_[p][near] == v) {
            next = p;
            break;
          }
          v = p;
        }
        v = next;
      }
    }
    return out;
  }

  // Post-order comparison: descendants come first, otherwise the left branch at the split.
  bool post_less(int a, int b) const {
    if (a == b) return false;
    const auto pa = path(a), pb = path(b);
    const std::size_t common = std::min(pa.size(), pb.size());
    for (std::size_t j = 0; j < common; ++j) {
      if (pa[j] != pb[j]) return pa[j] < pb[j];
    }
    return pa.size() > pb.size();
  }

  static constexpr int kUnknown = -2;
  static constexpr int kNone = -1;

 private:
  int add(int parent) {
    kids_.push_back({kUnknown, kUnknown});
    parent_.push_back(parent);
    return static_cast<int>(kids_.size()) - 1;
  }

  int descend(int v, int side) {
    while (child(v, side) != kNone) v = child(v, side);
    return v;
  }

  std::vector<int> path(int v) const {
    std::vector<int> steps;
    while (parent_[v] >= 0) {
      const int p = parent_[v];
      steps.push_back(kids_[p][0] == v ? 0 : 1);
      v = p;
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
  }

  RandomStream& rs_;
  std::vector<std::array<int, 2>> kids_;
  std::vector<int> parent_;
};

// Post-order ranks (1-based) of the given vertices among themselves.
std::vector<int> post_ranks(const LazyTree& t, const std::vector<int>& vs) {
  std::vector<int> idx(vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j) idx[j] = static_cast<int>(j);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return t.post_less(vs[a], vs[b]); });
  std::vector<int> rank(vs.size());
  for (std::size_t r = 0; r < idx.size(); ++r) rank[idx[r]] = static_cast<int>(r) + 1;
  return rank;
}

}  // namespace

RootedPermutation limit231_window(int h, RandomStream& rs) {
  if (h < 1) throw std::invalid_argument("limit231_window: h must be >= 1");
  // Values are tracked as integer keys; only elements that can ever fall inside
  // the radius-h window are materialized. Sides list keys outward from the root.
  std::vector<long long> left_keys, right_keys;
  long long lo, hi, root_key;
  bool left_full, right_full;
  {
    LazyTree s0(rs);  // conditioned nonempty, rooted at its maximum
    const auto preds = s0.walk(s0.child(0, 0), h, false);
    const auto succs = s0.walk(s0.child(0, 1), h, true);
    std::vector<int> all(preds.begin(), preds.end());
    all.push_back(0);
    all.insert(all.end(), succs.begin(), succs.end());
    const auto rank = post_ranks(s0, all);
    for (std::size_t j = 0; j < preds.size(); ++j) left_keys.push_back(rank[j]);
    root_key = rank[preds.size()];
    for (std::size_t j = 0; j < succs.size(); ++j) right_keys.push_back(rank[preds.size() + 1 + j]);
    lo = 1;
    hi = static_cast<long long>(all.size());
    left_full = static_cast<int>(preds.size()) == h;
    right_full = static_cast<int>(succs.size()) == h;
  }
  int steps = 0;
  while (!left_full || !right_full) {
    if (++steps > 64 * h) throw std::runtime_error("limit231_window: no stabilization within 64*h steps");
    const bool go_right = rs.coin();
    if (go_right ? right_full : left_full) continue;  // lands outside the window
    auto& keys = go_right ? right_keys : left_keys;
    const int need = h - static_cast<int>(keys.size()) - 1;
    const long long max_key = hi + 1;
    std::vector<int> elems;
    std::vector<int> rank;
    if (rs.coin()) {  // the inserted Boltzmann piece is nonempty
      LazyTree s(rs);
      elems = s.walk(0, need, go_right);
      rank = post_ranks(s, elems);
    }
    const long long e = static_cast<long long>(elems.size());
    keys.push_back(go_right ? max_key + e : max_key);
    for (std::size_t j = 0; j < elems.size(); ++j) {
      // Right pieces sit between the old values and the new maximum, left pieces below everything.
      keys.push_back(go_right ? hi + rank[j] : lo - e - 1 + rank[j]);
    }
    if (go_right) {
      hi = max_key + e;
    } else {
      lo -= e;
      hi = max_key;
    }
    (go_right ? right_full : left_full) = static_cast<int>(keys.size()) >= h;
  }
  std::vector<long long> window(left_keys.begin(), left_keys.begin() + h);
  std::reverse(window.begin(), window.end());
  window.push_back(root_key);
  window.insert(window.end(), right_keys.begin(), right_keys.begin() + h);
  return RootedPermutation(standardize(std::span<const long long>(window)), h + 1);
}

RootedPermutation limit321_window(int h, RandomStream& rs) {
  if (h < 1) throw std::invalid_argument("limit321_window: h must be >= 1");
  const int n = 2 * h + 1;
  std::vector<char> plus(n);
  int minus_count = 0;
  for (int j = 0; j < n; ++j) {
    plus[j] = rs.coin();
    minus_count += !plus[j];
  }
  std::vector<int> w(n);
  int next_minus = 1, next_plus = minus_count + 1;
  for (int j = 0; j < n; ++j) w[j] = plus[j] ? next_plus++ : next_minus++;
  return RootedPermutation(Permutation::from_trusted(std::move(w)), h + 1);
}

}  // namespace permlocal
