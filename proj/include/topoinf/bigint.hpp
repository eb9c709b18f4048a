#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "topoinf/common.hpp"

namespace topoinf {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt big_binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (unsigned i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;  // exact: product of i+1 consecutive integers
  }
  return result;
}

inline BigInt big_factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

// Integer square root; `exact` reports whether n is a perfect square.
inline BigInt isqrt_checked(const BigInt& n, bool& exact) {
  require(n >= 0, errc::invalid_argument, "isqrt of negative value");
  BigInt root = boost::multiprecision::sqrt(n);
  exact = (root * root == n);
  return root;
}

inline double big_to_double(const BigInt& v) { return v.convert_to<double>(); }

}  // namespace topoinf
