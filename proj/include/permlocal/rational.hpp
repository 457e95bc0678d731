#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace permlocal {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational pow2(int e) {
  Rational r = 1;
  if (e >= 0) {
    r = Rational(BigInt(1) << e);
  } else {
    r = Rational(BigInt(1), BigInt(1) << (-e));
  }
  return r;
}

inline std::string to_string(const Rational& r) { return r.str(); }
inline double to_double(const Rational& r) { return r.convert_to<double>(); }
Rational parse_rational(const std::string& text);

}  // namespace permlocal
