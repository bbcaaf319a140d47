#pragma once

// Simply structured ({-1,0,1}) Laplacian eigenbases of threshold graphs:
// the closed-form decision, the explicit construction, and an exhaustive
// enumeration oracle that works from L alone.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "threshold/graph.hpp"
#include "threshold/linalg.hpp"

namespace threshold {

/// A run of consecutive shared-basis indices [first, last] with one eigenvalue.
struct EigenGroup {
  Int eigenvalue = 0;
  int first = 0;
  int last = 0;
  int size() const { return last - first + 1; }
  friend bool operator==(const EigenGroup&, const EigenGroup&) = default;
};

struct GroupBoundaries {
  /// Groups covering 1..n-1, listed from the top index range downwards.
  std::vector<EigenGroup> groups;
  int kernel_index = 0;
  /// Range starts l_1 > l_2 > ... in the same order as groups.
  std::vector<int> starts() const;
};

GroupBoundaries group_boundaries(const ThresholdGraph& g);

struct SsViolation {
  enum class Constraint { kBlockCount, kOnesBlock, kZerosBlock, kFirstBlockIdentity };
  Constraint constraint;
  int index = 0;  // block index i (1-based); 0 for the block-count bound
  Int lower = 0;
  Int upper = 0;
  Int actual = 0;
  std::string describe() const;
};

struct SsVerdict {
  bool simply_structured = false;
  std::optional<SsViolation> violation;
};

/// Closed-form decision from the block form; reports the first violated bound.
SsVerdict is_simply_structured(const ThresholdGraph& g);

/// {-1,0,1} basis of span{x^p, ..., x^{q-1}} in dimension n. For p >= 2 this
/// requires 2p <= q (E_NOT_SS_GROUP otherwise).
std::vector<IntVector> ss_group_basis(int p, int q, int n);

struct SsBasis {
  std::vector<IntVector> vectors;
  std::vector<Int> eigenvalues;  // parallel to vectors
  IntMatrix matrix() const { return IntMatrix::from_columns(vectors); }
};

/// Full {-1,0,1} eigenbasis, verified exactly before return. Throws E_NOT_SS.
SsBasis ss_eigenbasis(const ThresholdGraph& g);

/// All {-1,0,1} eigenvectors of one eigenspace, up to sign (first nonzero entry is +1).
struct TernaryEigenspace {
  Int eigenvalue = 0;
  int dimension = 0;
  std::vector<IntVector> vectors;
  int rank = 0;  // exact rank of `vectors`
  bool spanned() const { return rank == dimension; }
};

struct TernaryEnumeration {
  std::vector<TernaryEigenspace> eigenspaces;  // eigenvalues descending
  bool integral = true;                        // eigenspace dimensions add up to n
  std::size_t visited = 0;                     // enumeration nodes spent
};

/// Enumerates {-1,0,1} eigenvectors of a symmetric integer matrix with
/// eigenvalues in [0, n], eigenspace by eigenspace, directly from the matrix.
/// Each eigenspace is parameterised by the free coordinates of an exact
/// null-space basis of L - mu I, so exactly the {-1,0,1} vectors of the space
/// are visited. Throws E_BUDGET if more than `node_limit` nodes are needed.
TernaryEnumeration enumerate_ternary_eigenvectors(const IntMatrix& lap,
                                                  std::size_t node_limit = SIZE_MAX);

inline constexpr int kOracleMaxOrder = 12;

/// Brute-force decision: every eigenspace spanned by its {-1,0,1} eigenvectors.
/// Throws E_TOO_LARGE above kOracleMaxOrder vertices.
bool ss_oracle(const ThresholdGraph& g);

}  // namespace threshold
