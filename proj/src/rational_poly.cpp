#include "permlocal/rational_poly.hpp"

#include <stdexcept>

namespace permlocal {

Rational parse_rational(const std::string& text) {
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational: '" + text + "'");
  }
}

RationalPoly::RationalPoly(Rational c) : coeffs_{std::move(c)} { trim(); }

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPoly RationalPoly::monomial(int a, int b) {
  RationalPoly out(1);
  for (int i = 0; i < a; ++i) out = out * p();
  for (int i = 0; i < b; ++i) out = out * one_minus_p();
  return out;
}

Rational RationalPoly::coefficient(int e) const {
  return e >= 0 && e < static_cast<int>(coeffs_.size()) ? coeffs_[e] : Rational(0);
}

Rational RationalPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(static_cast<int>(i)) + b.coefficient(static_cast<int>(i));
  return RationalPoly(std::move(c));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(static_cast<int>(i)) - b.coefficient(static_cast<int>(i));
  return RationalPoly(std::move(c));
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::divide_one_minus_p() const {
  // f(p) = (1-p) g(p)  =>  g_0 = f_0, g_i = f_i + g_{i-1}, and g_{deg} must vanish.
  if (is_zero()) return {};
  std::vector<Rational> g(coeffs_.size());
  Rational prev = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    g[i] = coeffs_[i] + prev;
    prev = g[i];
  }
  if (g.back() != 0) throw std::domain_error("polynomial is not divisible by (1-p)");
  g.pop_back();
  return RationalPoly(std::move(g));
}

std::optional<RationalPoly::Factored> RationalPoly::factored() const {
  if (is_zero()) return std::nullopt;
  Factored f;
  while (coeffs_[f.a] == 0) ++f.a;
  RationalPoly rest(std::vector<Rational>(coeffs_.begin() + f.a, coeffs_.end()));
  while (rest.degree() > 0) {
    try {
      rest = rest.divide_one_minus_p();
    } catch (const std::domain_error&) {
      return std::nullopt;
    }
    ++f.b;
  }
  f.c = rest.coefficient(0);
  return f;
}

std::string RationalPoly::factored_string() const {
  const auto f = factored();
  if (!f) return expanded_string();
  std::string s;
  auto add = [&](const std::string& part) {
    if (!s.empty()) s += '*';
    s += part;
  };
  if (f->c != 1 || (f->a == 0 && f->b == 0)) add(f->c.str());
  if (f->a == 1) add("p");
  if (f->a > 1) add("p^" + std::to_string(f->a));
  if (f->b == 1) add("(1-p)");
  if (f->b > 1) add("(1-p)^" + std::to_string(f->b));
  return s;
}

std::string RationalPoly::expanded_string() const {
  if (is_zero()) return "[0]";
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ", ";
    s += coeffs_[i].str();
  }
  return s + "]";
}

}  // namespace permlocal
