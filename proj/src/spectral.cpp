#include "threshold/spectral.hpp"

#include <algorithm>
#include <functional>

#include "threshold/error.hpp"

namespace threshold {

Spectrum to_spectrum(std::vector<Int> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  Spectrum s;
  for (Int v : values) {
    if (!s.empty() && s.back().value == v)
      ++s.back().multiplicity;
    else
      s.push_back({v, 1});
  }
  return s;
}

Spectrum spectrum_from_degrees(const ThresholdGraph& g) {
  const auto d = degree_data(g);
  const int n = g.order();
  std::vector<Int> mu(n, 0);
  for (int i = 1; i <= n - 1; ++i)
    mu[i - 1] = i <= d.trace ? d.degrees[i - 1] + 1 : d.degrees[i];
  return to_spectrum(std::move(mu));
}

Spectrum spectrum(const ThresholdGraph& g) {
  const auto blocks = g.blocks();
  const int n = g.order();
  const int r = static_cast<int>(blocks.size());
  Spectrum s;
  // Dominating blocks: n - (s_{i+1} + ... + s_r) with multiplicity t_i.
  int later_zeros = 0;
  for (int i = r - 1; i >= 0; --i) {
    s.push_back({n - later_zeros, blocks[i].ones});
    later_zeros += blocks[i].zeros;
  }
  // Isolated blocks: t_i + ... + t_r with multiplicity s_i (s_1 - 1 for the first block).
  std::vector<int> tail_ones(r + 1, 0);
  for (int i = r - 1; i >= 0; --i) tail_ones[i] = tail_ones[i + 1] + blocks[i].ones;
  if (blocks[0].zeros >= 2) s.push_back({tail_ones[0], blocks[0].zeros - 1});
  for (int i = 1; i < r; ++i) s.push_back({tail_ones[i], blocks[i].zeros});
  s.push_back({0, 1});

  std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) { return a.value > b.value; });
  if (s != spectrum_from_degrees(g))
    throw Error(ErrorCode::kVerifyFailed, "block-form spectrum disagrees with degree formula for " +
                                              g.sequence());
  return s;
}

IntVector shared_eigenvector(int n, int l) {
  if (n < 2 || l < 1 || l > n) throw Error(ErrorCode::kPrecondition, "need 1 <= l <= n, n >= 2");
  if (l == n) return IntVector(n, 1);
  IntVector x(n, 0);
  for (int i = 0; i < l; ++i) x[i] = 1;
  x[l] = -l;
  return x;
}

IntMatrix shared_eigenbasis(int n) {
  std::vector<IntVector> cols;
  for (int l = 1; l <= n; ++l) cols.push_back(shared_eigenvector(n, l));
  return IntMatrix::from_columns(cols);
}

EigenAssignment assign_eigenvalues(const ThresholdGraph& g) {
  const int n = g.order();
  const IntMatrix lap = laplacian(g);
  std::vector<Int> mu(n);
  for (int l = 1; l <= n; ++l) {
    const IntVector x = shared_eigenvector(n, l);
    const IntVector lx = multiply(lap, x);
    // x_1 = 1 for every l, so the ratio is read off the first coordinate.
    const Int candidate = lx[0];
    for (int i = 0; i < n; ++i)
      if (lx[i] != candidate * x[i])
        throw Error(ErrorCode::kNotEigenvector,
                    "x^" + std::to_string(l) + " is not an eigenvector of L(" + g.sequence() + ")");
    mu[l - 1] = candidate;
  }
  return EigenAssignment(std::move(mu));
}

namespace {

RationalMatrix projection_from(const EigenAssignment& a, int n, Int mu) {
  std::vector<IntVector> cols;
  for (int l = 1; l <= n; ++l)
    if (a.at(l) == mu) cols.push_back(shared_eigenvector(n, l));
  if (cols.empty())
    throw Error(ErrorCode::kNotEigenvalue, std::to_string(mu) + " is not a Laplacian eigenvalue");
  const RationalMatrix b = to_rational(IntMatrix::from_columns(cols));
  const RationalMatrix bt = b.transpose();
  return b * inverse(bt * b) * bt;
}

}  // namespace

RationalMatrix projection(const ThresholdGraph& g, Int mu) {
  return projection_from(assign_eigenvalues(g), g.order(), mu);
}

SpectralDecomposition::SpectralDecomposition(const ThresholdGraph& g)
    : graph_(g), assignment_(assign_eigenvalues(g)) {
  for (const auto& e : assignment_.as_spectrum()) eigenvalues_.push_back(e.value);
  for (int l = 1; l <= g.order(); ++l) indices_[assignment_.at(l)].push_back(l);
}

const std::vector<int>& SpectralDecomposition::indices(Int mu) const {
  auto it = indices_.find(mu);
  if (it == indices_.end())
    throw Error(ErrorCode::kNotEigenvalue, std::to_string(mu) + " is not a Laplacian eigenvalue");
  return it->second;
}

const RationalMatrix& SpectralDecomposition::projection(Int mu) const {
  indices(mu);
  std::lock_guard lock(mutex_);
  auto it = projections_.find(mu);
  if (it == projections_.end())
    it = projections_.emplace(mu, projection_from(assignment_, graph_.order(), mu)).first;
  return it->second;
}

std::vector<Rational> SpectralDecomposition::project(Int mu, std::span<const Int> x) const {
  return multiply(projection(mu), x);
}

IntVector shared_coordinates(std::span<const Int> x) {
  const std::size_t n = x.size();
  IntVector c(n, 0);
  Int prefix = 0;
  for (std::size_t l = 1; l < n; ++l) {
    prefix += x[l - 1];
    c[l - 1] = prefix - static_cast<Int>(l) * x[l];
  }
  c[n - 1] = prefix + (n > 0 ? x[n - 1] : 0);
  return c;
}

}  // namespace threshold
