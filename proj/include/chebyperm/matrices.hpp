#pragma once

#include <cstddef>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <vector>

#include "chebyperm/integers.hpp"
#include "chebyperm/polynomial.hpp"

namespace chebyperm {

// Dense row-major matrix.  The defining formulas index rows and columns
// from 1; storage is 0-based and the builders convert at the boundary.
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, T fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

using IntMatrix = Matrix<int>;
using PolyMatrix = Matrix<IntPolynomial>;

// n x n band matrix: entry (i, j) is 1 exactly when |i - j| <= d.  Its
// permanent counts the permutations moving no position by more than d.
inline IntMatrix build_band_matrix(long long d, long long n) {
  if (d < 0) throw std::domain_error("band matrix: d must be non-negative");
  if (n < 1) throw std::domain_error("band matrix: n must be positive");
  IntMatrix a(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (long long i = 1; i <= n; ++i)
    for (long long j = 1; j <= n; ++j)
      a(i - 1, j - 1) = std::llabs(i - j) <= d ? 1 : 0;
  return a;
}

// Doubled-corner band matrix: 0 outside the band |i - j| <= d, 2 inside the
// band where i + j <= d + 1 or i + j >= 2n + 1 - d, 1 elsewhere.  Every row
// and column sums to 2d + 1.  Requires n >= 2d + 1 so the doubled corners
// cannot overlap.
inline IntMatrix build_klove_matrix(long long d, long long n) {
  if (d < 0) throw std::domain_error("klove matrix: d must be non-negative");
  if (n < 2 * d + 1) throw std::domain_error("klove matrix: requires n >= 2d + 1");
  IntMatrix b(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (long long i = 1; i <= n; ++i)
    for (long long j = 1; j <= n; ++j) {
      if (std::llabs(i - j) > d)
        b(i - 1, j - 1) = 0;
      else if (i + j <= d + 1 || i + j >= 2 * n + 1 - d)
        b(i - 1, j - 1) = 2;
      else
        b(i - 1, j - 1) = 1;
    }
  return b;
}

// d x 2d polynomial matrix: row i carries x in columns j <= d + 1 - i, then
// 1 through column d + i, then 0.  Its permanent is the degree-d corner
// weight polynomial; substituting x = 2 recovers the top-left d x 2d block
// of the doubled-corner matrix.
inline PolyMatrix build_omega_matrix(long long d) {
  if (d < 1) throw std::domain_error("omega matrix: d must be positive");
  PolyMatrix m(static_cast<std::size_t>(d), static_cast<std::size_t>(2 * d));
  const IntPolynomial one = IntPolynomial::constant(1);
  const IntPolynomial x = IntPolynomial::variable();
  for (long long i = 1; i <= d; ++i)
    for (long long j = 1; j <= 2 * d; ++j) {
      if (j <= d + 1 - i)
        m(i - 1, j - 1) = x;
      else if (j <= d + i)
        m(i - 1, j - 1) = one;
    }
  return m;
}

// Entry-wise substitution of an integer for x.
inline IntMatrix substitute(const PolyMatrix& m, long long x) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const BigInt v = m(i, j)(BigInt(x));
      if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw std::domain_error("substitute: entry does not fit a machine integer");
      r(i, j) = v.convert_to<int>();
    }
  return r;
}

inline std::vector<long long> row_sums(const IntMatrix& m) {
  std::vector<long long> s(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s[i] += m(i, j);
  return s;
}

inline std::vector<long long> col_sums(const IntMatrix& m) {
  std::vector<long long> s(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s[j] += m(i, j);
  return s;
}

}  // namespace chebyperm
