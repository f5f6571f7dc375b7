#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace spinideal {

// Exact arbitrary-precision scalars. Rational values are always kept in
// lowest terms with a positive denominator; zero is 0/1.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer rational_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer rational_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline std::string rational_str(const Rational& r) {
  if (rational_den(r) == 1) return rational_num(r).str();
  return rational_num(r).str() + "/" + rational_den(r).str();
}

inline Integer factorial(int n) {
  Integer acc = 1;
  for (int i = 2; i <= n; ++i) acc *= i;
  return acc;
}

// 2^k as an exact integer, k >= 0.
inline Integer pow2(int k) {
  Integer one = 1;
  return one << k;
}

// 1/2^k as an exact rational.
inline Rational half_power(int k) { return Rational(Integer(1), pow2(k)); }

}  // namespace spinideal
