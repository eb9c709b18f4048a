#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "topoinf/bigint.hpp"
#include "topoinf/common.hpp"

namespace topoinf {

// Minimal dense row-major matrix. Enough for the exact pipelines (BigInt)
// and the stochastic operators (double); not a linear-algebra library.
template <class T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), d_(rows * cols, fill) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
  }

  T trace() const {
    T t{};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> d_;
};

template <class T>
Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b) {
  require(a.cols() == b.rows(), errc::invalid_argument, "matrix size mismatch");
  Mat<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == T{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <class T>
Mat<T> mat_pow(const Mat<T>& a, unsigned long e) {
  require(a.rows() == a.cols(), errc::invalid_argument, "mat_pow needs a square matrix");
  Mat<T> result = Mat<T>::identity(a.rows());
  Mat<T> base = a;
  while (e > 0) {
    if (e & 1UL) result = mat_mul(result, base);
    e >>= 1UL;
    if (e > 0) base = mat_mul(base, base);
  }
  return result;
}

// Fraction-free Bareiss elimination. All intermediate divisions are exact,
// so the determinant of an integer matrix comes out exact.
inline BigInt det_bareiss(Mat<BigInt> m) {
  require(m.rows() == m.cols(), errc::invalid_argument, "determinant needs a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  BigInt prev_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev_pivot;
      }
      m(i, k) = 0;
    }
    prev_pivot = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

}  // namespace topoinf
