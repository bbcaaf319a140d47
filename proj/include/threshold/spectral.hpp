#pragma once

// Laplacian spectra of threshold graphs, the shared star eigenbasis x^1..x^n,
// and exact eigenprojections.

#include <map>
#include <mutex>
#include <span>
#include <vector>

#include "threshold/graph.hpp"
#include "threshold/linalg.hpp"

namespace threshold {

struct SpectrumEntry {
  Int value = 0;
  int multiplicity = 0;
  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Distinct eigenvalues with multiplicities, sorted descending (0 last).
using Spectrum = std::vector<SpectrumEntry>;

/// Closed-form spectrum from the block form; cross-checked against spectrum_from_degrees().
Spectrum spectrum(const ThresholdGraph& g);

/// Spectrum from the sorted degree sequence: d_i + 1 for i <= tr(G), d_{i+1} up to n-1, then 0.
Spectrum spectrum_from_degrees(const ThresholdGraph& g);

/// Groups a multiset of eigenvalues into a Spectrum.
Spectrum to_spectrum(std::vector<Int> values);

/// x^l: l ones, then -l, then zeros (l < n); x^n is the all-ones vector.
IntVector shared_eigenvector(int n, int l);
/// Columns x^1..x^n.
IntMatrix shared_eigenbasis(int n);

/// mu(l) with L x^l = mu(l) x^l for l = 1..n.
class EigenAssignment {
 public:
  explicit EigenAssignment(std::vector<Int> values) : values_(std::move(values)) {}

  Int at(int l) const { return values_.at(static_cast<std::size_t>(l - 1)); }
  int size() const { return static_cast<int>(values_.size()); }
  const std::vector<Int>& values() const { return values_; }
  Spectrum as_spectrum() const { return to_spectrum(values_); }

 private:
  std::vector<Int> values_;
};

/// Computes L x^l exactly for each l; throws E_NOT_EIGENVECTOR if some x^l is not an eigenvector.
EigenAssignment assign_eigenvalues(const ThresholdGraph& g);

/// E_mu = B (B^T B)^{-1} B^T over the x^l with mu(l) = mu. Throws E_NOT_EIGENVALUE.
RationalMatrix projection(const ThresholdGraph& g, Int mu);

/// Eigenvalue groups and eigenprojections of one graph. Projection matrices
/// are built on first use; the object may be shared across threads.
class SpectralDecomposition {
 public:
  explicit SpectralDecomposition(const ThresholdGraph& g);

  const ThresholdGraph& graph() const { return graph_; }
  int order() const { return graph_.order(); }
  const EigenAssignment& assignment() const { return assignment_; }
  /// Distinct eigenvalues, descending.
  const std::vector<Int>& eigenvalues() const { return eigenvalues_; }
  /// Indices l with mu(l) = mu, ascending. Throws E_NOT_EIGENVALUE.
  const std::vector<int>& indices(Int mu) const;
  /// Throws E_NOT_EIGENVALUE.
  const RationalMatrix& projection(Int mu) const;
  /// E_mu x for an integer vector x.
  std::vector<Rational> project(Int mu, std::span<const Int> x) const;

 private:
  ThresholdGraph graph_;
  EigenAssignment assignment_;
  std::vector<Int> eigenvalues_;
  std::map<Int, std::vector<int>> indices_;
  mutable std::mutex mutex_;
  mutable std::map<Int, RationalMatrix> projections_;
};

/// (x^l . x) for l = 1..n. Because the x^l are mutually orthogonal,
/// E_mu x = sum over l in indices(mu) of (x^l . x) / |x^l|^2 x^l.
IntVector shared_coordinates(std::span<const Int> x);

}  // namespace threshold
