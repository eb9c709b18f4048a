#pragma once

#include <cstddef>
#include <vector>

#include "topoinf/bigint.hpp"
#include "topoinf/common.hpp"

namespace topoinf {

// Dense integer-coefficient polynomial; coeff(j) is the coefficient of u^j.
// Everything here is exact: the zeta pipeline never touches floating point.
class IntPoly {
 public:
  IntPoly() : c_(1, BigInt(0)) {}
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back(0);
    trim();
  }

  static IntPoly constant(BigInt v) { return IntPoly(std::vector<BigInt>{std::move(v)}); }
  static IntPoly one() { return constant(1); }

  // 1 - u^m
  static IntPoly one_minus_power(std::size_t m) {
    std::vector<BigInt> c(m + 1, BigInt(0));
    c[0] = 1;
    c[m] = -1;
    return IntPoly(std::move(c));
  }

  std::size_t degree() const { return c_.size() - 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(std::size_t j) const { return j < c_.size() ? c_[j] : BigInt(0); }
  bool is_zero() const { return c_.size() == 1 && c_[0] == 0; }

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  IntPoly operator+(const IntPoly& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
  }

  IntPoly operator-() const {
    std::vector<BigInt> r = c_;
    for (auto& v : r) v = -v;
    return IntPoly(std::move(r));
  }

  IntPoly operator-(const IntPoly& o) const { return *this + (-o); }

  IntPoly operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return IntPoly(std::move(r));
  }

  IntPoly mul_truncated(const IntPoly& o, std::size_t max_deg) const {
    std::vector<BigInt> r(max_deg + 1, BigInt(0));
    for (std::size_t i = 0; i < c_.size() && i <= max_deg; ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; j < o.c_.size() && i + j <= max_deg; ++j)
        r[i + j] += c_[i] * o.c_[j];
    }
    return IntPoly(std::move(r));
  }

  IntPoly pow(unsigned e) const {
    IntPoly result = one();
    IntPoly base = *this;
    while (e > 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e > 0) base = base * base;
    }
    return result;
  }

  IntPoly pow_truncated(unsigned e, std::size_t max_deg) const {
    IntPoly result = one();
    IntPoly base = *this;
    while (e > 0) {
      if (e & 1U) result = result.mul_truncated(base, max_deg);
      e >>= 1U;
      if (e > 0) base = base.mul_truncated(base, max_deg);
    }
    return result;
  }

  IntPoly derivative() const {
    if (c_.size() == 1) return IntPoly();
    std::vector<BigInt> r(c_.size() - 1);
    for (std::size_t j = 1; j < c_.size(); ++j) r[j - 1] = c_[j] * BigInt(j);
    return IntPoly(std::move(r));
  }

  BigInt eval(const BigInt& x) const {
    BigInt acc = 0;
    for (std::size_t j = c_.size(); j-- > 0;) acc = acc * x + c_[j];
    return acc;
  }

  // k-th derivative evaluated at x, exact.
  BigInt derivative_at(const BigInt& x, unsigned k) const {
    IntPoly p = *this;
    for (unsigned i = 0; i < k; ++i) p = p.derivative();
    return p.eval(x);
  }

 private:
  void trim() {
    while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

// Series coefficients s_1..s_M of u * p'(u) / p(u), requiring p(0) = 1.
// Division by a unit-constant-term series keeps everything in integers.
inline std::vector<BigInt> log_derivative_series(const IntPoly& p, std::size_t M) {
  require(p.coeff(0) == 1, errc::invalid_argument, "series division needs constant term 1");
  std::vector<BigInt> s(M + 1, BigInt(0));
  for (std::size_t m = 1; m <= M; ++m) {
    BigInt acc = BigInt(m) * p.coeff(m);  // coefficient of u^m in u p'(u)
    for (std::size_t k = 1; k <= m; ++k) acc -= p.coeff(k) * s[m - k];
    s[m] = acc;
  }
  return s;
}

// Newton divided-difference interpolation through (x_i, y_i) with exact
// rational arithmetic. The caller promises the data comes from an integer
// polynomial; a fractional coefficient is reported as an inconsistency.
inline IntPoly interpolate_integer_polynomial(const std::vector<BigInt>& xs,
                                              const std::vector<BigInt>& ys) {
  require(xs.size() == ys.size() && !xs.empty(), errc::invalid_argument,
          "interpolation needs matching, nonempty node lists");
  const std::size_t n = xs.size();
  std::vector<BigRat> divdiff(n);
  for (std::size_t i = 0; i < n; ++i) divdiff[i] = BigRat(ys[i]);
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      BigRat denom = BigRat(xs[i] - xs[i - level]);
      require(denom != 0, errc::invalid_argument, "repeated interpolation node");
      divdiff[i] = (divdiff[i] - divdiff[i - 1]) / denom;
      if (i == level) break;
    }
  }
  // Horner expansion of the Newton form into monomial coefficients.
  std::vector<BigRat> acc(1, divdiff[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    acc.push_back(0);
    for (std::size_t j = acc.size() - 1; j > 0; --j)
      acc[j] = acc[j - 1] - BigRat(xs[i]) * acc[j];
    acc[0] = divdiff[i] - BigRat(xs[i]) * acc[0];
    // acc currently holds coefficients of the partial Newton polynomial.
  }
  std::vector<BigInt> out(acc.size());
  for (std::size_t j = 0; j < acc.size(); ++j) {
    require(boost::multiprecision::denominator(acc[j]) == 1, errc::inconsistency,
            "interpolated polynomial has a non-integer coefficient");
    out[j] = boost::multiprecision::numerator(acc[j]);
  }
  return IntPoly(std::move(out));
}

}  // namespace topoinf
