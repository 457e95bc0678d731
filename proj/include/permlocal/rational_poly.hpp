#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permlocal/rational.hpp"

namespace permlocal {

// Polynomial in p with exact rational coefficients; coeffs_[e] multiplies p^e.
class RationalPoly {
 public:
  RationalPoly() = default;
  RationalPoly(Rational c);  // NOLINT(google-explicit-constructor)
  RationalPoly(int c) : RationalPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit RationalPoly(std::vector<Rational> coeffs);

  static RationalPoly p() { return RationalPoly(std::vector<Rational>{0, 1}); }
  static RationalPoly one_minus_p() { return RationalPoly(std::vector<Rational>{1, -1}); }
  // p^a (1-p)^b
  static RationalPoly monomial(int a, int b);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int e) const;

  Rational evaluate(const Rational& x) const;

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeffs_ == b.coeffs_; }

  // Exact division by (1-p); throws if it leaves a remainder.
  RationalPoly divide_one_minus_p() const;

  struct Factored {
    Rational c;
    int a = 0, b = 0;  // c · p^a · (1-p)^b
  };
  std::optional<Factored> factored() const;

  // Factored form when available, e.g. "p^15*(1-p)^7".
  std::string factored_string() const;
  std::string expanded_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace permlocal
