#include <doctest.h>

#include "permlocal/bijections.hpp"
#include "permlocal/limits.hpp"
#include "test_support.hpp"

using namespace permlocal;

namespace {
Permutation P(const char* s) { return parse_permutation(s); }
const Permutation k231 = Permutation{2, 3, 1};
const Permutation k321 = Permutation{3, 2, 1};
}  // namespace

TEST_CASE("binary tree bijection examples") {
  CHECK(perm_to_btree(P("1")) == BinaryTree());
  CHECK(to_string(perm_to_btree(P("21"))) == "(.(..))");
  CHECK(to_string(perm_to_btree(P("12"))) == "((..).)");
  CHECK_THROWS_AS(perm_to_btree(P("231")), std::invalid_argument);
  CHECK(btree_to_perm(parse_binary_tree("(.(..))")) == P("21"));
}

TEST_CASE("binary tree bijection is a bijection with maxima transport") {
  for (int n = 1; n <= 8; ++n) {
    std::set<std::string> seen;
    for (const auto& s : enumerate_class(k231, n)) {
      const auto t = perm_to_btree(s);
      CHECK(t.size() == n);
      CHECK(btree_to_perm(t) == s);
      seen.insert(to_string(t));
      // LRMax indices are the left branch, RLMax the right branch, read in in-order.
      const auto in = traverse(t, Traversal::in);
      std::vector<int> pos(n);
      for (int i = 0; i < n; ++i) pos[in[i]] = i + 1;
      std::vector<int> lb, rb;
      for (int v : left_branch(t)) lb.push_back(pos[v]);
      for (int v : right_branch(t)) rb.push_back(pos[v]);
      std::sort(lb.begin(), lb.end());
      std::sort(rb.begin(), rb.end());
      CHECK(lb == lr_maxima(s));
      CHECK(rb == rl_maxima(s));
    }
    CHECK(static_cast<std::int64_t>(seen.size()) == oracle::catalan(n));
    for (const auto& t : all_binary_trees(n)) CHECK(perm_to_btree(btree_to_perm(t)) == t);
  }
}

TEST_CASE("tree-side recursion of consecutive occurrences") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& t : all_binary_trees(n)) {
      const auto s = btree_to_perm(t);
      const auto sl = t.left(0) >= 0 ? btree_to_perm(oracle::binary_subtree(t, t.left(0))) : Permutation{};
      const auto sr = t.right(0) >= 0 ? btree_to_perm(oracle::binary_subtree(t, t.right(0))) : Permutation{};
      const int l = indmax(s);
      for (int k = 1; k <= n; ++k) {
        for (const auto& pi : enumerate_class(k231, k)) {
          const int m = indmax(pi);
          const int a = l - m + 1, b = l + k - m;
          const int hit = (a >= 1 && b <= n && pat_interval(s, a, b) == pi) ? 1 : 0;
          CHECK(c_occ(pi, s) == c_occ(pi, sl) + c_occ(pi, sr) + hit);
        }
      }
    }
  }
}

TEST_CASE("ordered tree bijection examples") {
  CHECK(otree_to_perm(tree_from_contour("UD")) == P("1"));
  CHECK(otree_to_perm(tree_from_contour("UUDD")) == P("21"));
  CHECK(otree_to_perm(tree_from_contour("UDUD")) == P("12"));
  CHECK(otree_to_perm(OrderedTree()).empty());
  CHECK(perm_to_otree(Permutation{}) == OrderedTree());
  CHECK(contour(perm_to_otree(P("21"))) == "UUDD");
  CHECK_THROWS_AS(perm_to_otree(P("321")), std::invalid_argument);
}

TEST_CASE("ordered tree bijection roundtrip and Q transport") {
  for (int n = 1; n <= 8; ++n) {
    std::set<std::string> seen;
    for (const auto& s : enumerate_class(k321, n)) {
      const auto t = perm_to_otree(s);
      CHECK(t.size() == n + 1);
      CHECK(otree_to_perm(t) == s);
      const auto lab = leaf_labels(t);
      CHECK(lab.q == e_plus(s));
      std::vector<int> vals;
      for (int i : e_plus(s)) vals.push_back(s(i));
      CHECK(lab.s == vals);
      seen.insert(contour(t));
    }
    CHECK(static_cast<std::int64_t>(seen.size()) == oracle::catalan(n));
    for (const auto& t : all_ordered_trees(n + 1)) CHECK(perm_to_otree(otree_to_perm(t)) == t);
  }
}

TEST_CASE("diagonal split") {
  CHECK(e_plus(Permutation::identity(4)) == std::vector<int>{1, 2, 3, 4});
  CHECK(e_minus(Permutation::identity(4)).empty());
  CHECK(e_plus(P("21")) == std::vector<int>{1});
  CHECK(e_minus(P("21")) == std::vector<int>{2});
  const auto s = P("14526738");
  CHECK(e_plus(s) == std::vector<int>{1, 2, 3, 5, 6, 8});
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : enumerate_class(k321, n)) {
      const auto ep = e_plus(p), em = e_minus(p);
      CHECK(ep.size() + em.size() == static_cast<std::size_t>(n));
      CHECK(pat(p, ep) == Permutation::identity(static_cast<int>(ep.size())));
      CHECK(pat(p, em) == Permutation::identity(static_cast<int>(em.size())));
    }
  }
}

TEST_CASE("window sets and separating lines") {
  const auto id = Permutation::identity(6);
  for (int i = 1; i <= 6; ++i) {
    for (int k = 1; k <= 2; ++k) {
      std::vector<int> expect;
      for (int x = -k; x <= k; ++x) {
        if (i + x >= 1 && i + x <= 6) expect.push_back(x);
      }
      CHECK(window_set(id, i, k) == expect);
      CHECK(has_separating_line(id, i, k));
    }
  }
  CHECK(window_set(P("21"), 1, 1) == std::vector<int>{0});
  CHECK(has_separating_line(P("21"), 1, 1));
  CHECK_FALSE(has_separating_line(P("214365"), 3, 2));
  CHECK_THROWS_AS(window_set(P("21"), 3, 1), std::out_of_range);
  CHECK_THROWS_AS(has_separating_line(P("21"), 1, 0), std::invalid_argument);
  // Direct evaluation of min E+ against max E- inside the window.
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : enumerate_class(k321, n)) {
      const auto ep = e_plus(p), em = e_minus(p);
      for (int i = 1; i <= n; ++i) {
        for (int k = 1; k <= 3; ++k) {
          int m_plus = 0, m_minus = 0;
          for (int j : ep) {
            if (std::abs(j - i) <= k && m_plus == 0) m_plus = j;
          }
          for (int j : em) {
            if (std::abs(j - i) <= k) m_minus = j;
          }
          const bool expect = m_plus == 0 || m_minus == 0 || p(m_plus) > p(m_minus);
          CHECK(has_separating_line(p, i, k) == expect);
        }
      }
    }
  }
}
