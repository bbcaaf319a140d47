#include "threshold/linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace threshold {

IntVector multiply(const IntMatrix& a, std::span<const Int> x) {
  if (x.size() != a.cols()) throw std::invalid_argument("dimension mismatch");
  IntVector y(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

std::vector<Rational> multiply(const RationalMatrix& a, std::span<const Int> x) {
  if (x.size() != a.cols()) throw std::invalid_argument("dimension mismatch");
  std::vector<Rational> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (x[j] != 0) y[i] += a(i, j) * static_cast<long>(x[j]);
  return y;
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  return std::inner_product(a.begin(), a.end(), b.begin(), Int{0});
}

RationalMatrix to_rational(const IntMatrix& a) {
  RationalMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = static_cast<long>(a(i, j));
  return r;
}

namespace {

Matrix<mpz_class> to_mpz(const IntMatrix& a) {
  Matrix<mpz_class> m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = static_cast<long>(a(i, j));
  return m;
}

// Bareiss elimination in place; returns rank and the sign of the row swaps.
std::size_t bareiss(Matrix<mpz_class>& m, int& sign) {
  sign = 1;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j)
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const IntMatrix& a) {
  auto m = to_mpz(a);
  int sign = 1;
  return bareiss(m, sign);
}

mpz_class determinant(const IntMatrix& a) {
  if (!a.square()) throw std::invalid_argument("determinant of non-square matrix");
  if (a.rows() == 0) return 1;
  auto m = to_mpz(a);
  int sign = 1;
  if (bareiss(m, sign) < a.rows()) return 0;
  return sign * m(a.rows() - 1, a.cols() - 1);
}

RationalMatrix inverse(const RationalMatrix& a) {
  if (!a.square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = a.rows();
  RationalMatrix m = a;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(p, j), m(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    const Rational pivot = m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) /= pivot;
      inv(c, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

NullspaceBasis nullspace(const IntMatrix& a) {
  RationalMatrix m = to_rational(a);
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const Rational pivot = m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }

  NullspaceBasis out;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) out.free_columns.push_back(c);

  out.basis = RationalMatrix(out.free_columns.size(), cols);
  for (std::size_t k = 0; k < out.free_columns.size(); ++k) {
    const std::size_t f = out.free_columns[k];
    out.basis(k, f) = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) out.basis(k, pivot_cols[i]) = -m(i, f);
  }
  return out;
}

namespace {

Int checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("RankAccumulator overflow");
  return static_cast<Int>(v);
}

void normalize(IntVector& v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x);
  if (g > 1)
    for (Int& x : v) x /= g;
}

}  // namespace

IntVector RankAccumulator::reduce(std::span<const Int> v) const {
  if (v.size() != length_) throw std::invalid_argument("dimension mismatch");
  IntVector w(v.begin(), v.end());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (w[p] == 0) continue;
    const Int a = rows_[k][p], b = w[p];
    for (std::size_t j = 0; j < length_; ++j)
      w[j] = checked(static_cast<__int128>(a) * w[j] - static_cast<__int128>(b) * rows_[k][j]);
    normalize(w);
  }
  return w;
}

bool RankAccumulator::independent(std::span<const Int> v) const {
  const IntVector w = reduce(v);
  for (Int x : w)
    if (x != 0) return true;
  return false;
}

bool RankAccumulator::insert(std::span<const Int> v) {
  IntVector w = reduce(v);
  std::size_t p = 0;
  while (p < length_ && w[p] == 0) ++p;
  if (p == length_) return false;
  // Keep every stored row zero at the new pivot so later reductions stay triangular.
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (rows_[k][p] == 0) continue;
    const Int a = w[p], b = rows_[k][p];
    for (std::size_t j = 0; j < length_; ++j)
      rows_[k][j] =
          checked(static_cast<__int128>(a) * rows_[k][j] - static_cast<__int128>(b) * w[j]);
    normalize(rows_[k]);
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

}  // namespace threshold
