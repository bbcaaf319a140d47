#pragma once

// Dense exact linear algebra over the integers and the rationals. Matrices in
// this project are small (n <= 20 in practice), so everything is row-major
// dense storage with straightforward cubic algorithms.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace threshold {

using Int = std::int64_t;
using IntVector = std::vector<Int>;
using Rational = mpq_class;

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  /// Builds a matrix whose j-th column is columns[j]. All columns must share a length.
  static Matrix from_columns(const std::vector<std::vector<T>>& columns) {
    if (columns.empty()) return {};
    Matrix m(columns.front().size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
      for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = columns[j].at(i);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  std::vector<std::vector<T>> columns() const {
    std::vector<std::vector<T>> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RationalMatrix = Matrix<Rational>;

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <typename T>
Matrix<T> operator+(Matrix<T> a, const Matrix<T>& b) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) += b(i, j);
  return a;
}

IntVector multiply(const IntMatrix& a, std::span<const Int> x);
std::vector<Rational> multiply(const RationalMatrix& a, std::span<const Int> x);
Int dot(std::span<const Int> a, std::span<const Int> b);

RationalMatrix to_rational(const IntMatrix& a);

/// Exact rank by fraction-free elimination.
std::size_t rank(const IntMatrix& a);

/// Exact determinant (Bareiss). The matrix must be square.
mpz_class determinant(const IntMatrix& a);

/// Exact inverse; throws std::domain_error if the matrix is singular.
RationalMatrix inverse(const RationalMatrix& a);

/// Basis of the right null space {x : a x = 0}, one basis vector per row.
/// Row k has a 1 in column free_columns[k] and 0 in every other free column,
/// so any null vector is determined by its entries on the free columns.
struct NullspaceBasis {
  RationalMatrix basis;
  std::vector<std::size_t> free_columns;
  std::size_t dimension() const { return free_columns.size(); }
};
NullspaceBasis nullspace(const IntMatrix& a);

/// Incremental exact rank of a growing set of integer vectors.
class RankAccumulator {
 public:
  explicit RankAccumulator(std::size_t length) : length_(length) {}

  /// Adds v if it is independent of the vectors seen so far; returns whether it was.
  bool insert(std::span<const Int> v);
  /// Same test as insert() without modifying the accumulator.
  bool independent(std::span<const Int> v) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  IntVector reduce(std::span<const Int> v) const;

  std::size_t length_;
  std::vector<IntVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace threshold
