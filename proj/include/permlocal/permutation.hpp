#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permlocal/rational.hpp"

namespace permlocal {

// One-line notation, values 1..n, positions 1-based. n = 0 is the empty permutation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);
  Permutation(std::initializer_list<int> word) : Permutation(std::vector<int>(word)) {}

  static Permutation identity(int n);
  // Skips validation; caller guarantees word is a permutation of 1..n.
  static Permutation from_trusted(std::vector<int> word);

  int size() const { return static_cast<int>(word_.size()); }
  bool empty() const { return word_.empty(); }
  int operator()(int i) const { return word_[i - 1]; }  // 1-based
  const std::vector<int>& word() const { return word_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

struct PatternStats {
  Permutation pattern;
  std::int64_t count = 0;
  Rational proportion;
};

template <class T>
Permutation standardize(std::span<const T> values);
Permutation standardize(std::initializer_list<long long> values);

// Positions in `indices` are 1-based; they are sorted before use.
Permutation pat(const Permutation& sigma, std::vector<int> indices);
// Consecutive pattern on [a,b]; empty when a > b.
Permutation pat_interval(const Permutation& sigma, int a, int b);

std::int64_t c_occ(const Permutation& pi, const Permutation& sigma);
Rational c_occ_proportion(const Permutation& pi, const Permutation& sigma);
PatternStats pattern_stats(const Permutation& pi, const Permutation& sigma);
// Counts every consecutive pattern of size k occurring in sigma.
std::map<Permutation, std::int64_t> window_pattern_counts(const Permutation& sigma, int k);

bool avoids(const Permutation& sigma, const Permutation& rho);

std::vector<int> lr_maxima(const Permutation& sigma);
std::vector<int> rl_maxima(const Permutation& sigma);
std::vector<int> maxima(const Permutation& sigma);  // union, ascending

Permutation inverse(const Permutation& sigma);
Permutation reverse(const Permutation& sigma);
Permutation complement(const Permutation& sigma);
Permutation direct_sum(const Permutation& pi, const Permutation& sigma);
Permutation star_insert(const Permutation& pi, int m);

int indmax(const Permutation& sigma);
struct MaxSplit {
  std::vector<int> left;
  std::vector<int> right;
};
MaxSplit split_at_max(const Permutation& sigma);
// std(sigma_L), std(sigma_R)
std::pair<Permutation, Permutation> split_at_max_std(const Permutation& sigma);

int inverse_descent_count(const Permutation& sigma);

std::string to_string(const Permutation& sigma);
Permutation parse_permutation(std::string_view text);

// Lexicographic enumeration of all of S^n.
std::vector<Permutation> all_permutations(int n);

}  // namespace permlocal
