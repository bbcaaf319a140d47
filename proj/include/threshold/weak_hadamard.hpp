#pragma once

// Weak Hadamard matrices (entries in {-1,0,1}, W^T W tridiagonal, invertible)
// and weak Hadamard diagonalizers of threshold Laplacians.
//
// Every certificate handed out by this module has been checked exactly:
// WhdCertificate can only be created through WhdCertificate::certify().

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "threshold/graph.hpp"
#include "threshold/linalg.hpp"

namespace threshold {

struct WeakHadamardVerdict {
  enum class Violation { kNone, kNotSquare, kEntryRange, kNotTridiagonal, kSingular };
  Violation violation = Violation::kNone;
  std::size_t row = 0;
  std::size_t col = 0;

  bool ok() const { return violation == Violation::kNone; }
  std::string describe() const;
};

/// Checks entry range, then tridiagonality of W^T W, then invertibility.
WeakHadamardVerdict is_weak_hadamard(const IntMatrix& w);

/// Returns the diagonal of Lambda (in column order of W) if every column of W
/// is an eigenvector of `lap`, i.e. lap * W = W * Lambda. W must be invertible.
std::optional<std::vector<Int>> diagonalizes(const IntMatrix& w, const IntMatrix& lap);
std::optional<std::vector<Int>> diagonalizes(const IntMatrix& w, const ThresholdGraph& g);

class WhdCertificate {
 public:
  /// Verifies W against `lap` and computes Lambda. Throws E_VERIFY_FAILED.
  static WhdCertificate certify(IntMatrix w, IntMatrix lap, std::vector<std::string> provenance);

  const IntMatrix& matrix() const { return w_; }
  const std::vector<Int>& lambda() const { return lambda_; }
  const IntMatrix& laplacian() const { return lap_; }
  const std::vector<std::string>& provenance() const { return provenance_; }
  int order() const { return static_cast<int>(w_.rows()); }

 private:
  WhdCertificate(IntMatrix w, IntMatrix lap, std::vector<Int> lambda,
                 std::vector<std::string> provenance)
      : w_(std::move(w)), lap_(std::move(lap)), lambda_(std::move(lambda)),
        provenance_(std::move(provenance)) {}

  IntMatrix w_;
  IntMatrix lap_;
  std::vector<Int> lambda_;
  std::vector<std::string> provenance_;
};

enum class WhdRoute {
  kSplitComplete,  // K_s^c v K_t with t - s in {0, 1, 2}
  kCliqueJoins,    // block-wise join conditions on (s_i, t_i)
  kSplitPlusEdge,  // (K_2 u K_{k-2}^c) v K_t with t - k in {0, 1, 2}, k >= 4
};

struct JoinParams {
  int l = 0;
  int m = 0;
};

struct JoinDecomposition {
  WhdRoute route = WhdRoute::kCliqueJoins;
  /// Split of t_1 when s_1 >= 3 (join-theorem route only).
  std::optional<JoinParams> base;
  /// One entry per block k = 2..r (join-theorem route only).
  std::vector<JoinParams> steps;
  std::string describe() const;
};

/// Sufficient conditions for WHD. nullopt means "not covered", not "not WHD".
std::optional<JoinDecomposition> whd_sufficient(const ThresholdGraph& g);

/// Difference chain e_i - e_{i+1} plus all-ones: diagonalizes K_n.
WhdCertificate clique_certificate(int n);

/// K_s^c v K_t for s >= 2 and t - s in {0, 1, 2}: both difference chains,
/// the join vector (1^s, (-1)^{t-1}, t-s-1), then all-ones.
WhdCertificate split_certificate(int s, int t);

/// Certificate for H v K_clique from a certificate of the connected graph H on
/// k vertices; requires clique - k in {0, 1, 2} (E_JOIN_GAP).
WhdCertificate join_step(const WhdCertificate& h, int clique);

/// Sizes of the cliques K_{a_1}, ..., K_{a_l} whose successive joins onto a
/// graph with `prefix` vertices each satisfy a_j - (current order) in {0,1,2}
/// and together contribute `size` vertices. Smallest l wins.
std::optional<std::vector<int>> split_into_joins(int size, int prefix);

inline constexpr std::size_t kDefaultSearchBudget = 2'000'000;

struct WhdConstruction {
  std::optional<WhdCertificate> certificate;
  std::optional<JoinDecomposition> witness;
  /// True when whd_search completed without finding a certificate.
  bool proven_absent = false;
  std::vector<std::string> trace;
};

/// Joins of cliques split along the blocks of G, re-verified against L(G),
/// with whd_search as fallback. Graphs that are not simply structured are
/// reported as proven_absent without searching.
WhdConstruction whd_construct(const ThresholdGraph& g,
                              std::size_t search_budget = kDefaultSearchBudget);

struct WhdSearchResult {
  std::optional<WhdCertificate> certificate;  // empty: search space exhausted
  std::size_t nodes = 0;
};

/// Exhaustive backtracking over {-1,0,1} eigenvectors, eigenspace by
/// eigenspace. Requires a simply structured graph (E_PRECONDITION); throws
/// E_BUDGET when `budget` nodes are spent without a decision.
WhdSearchResult whd_search(const ThresholdGraph& g, std::size_t budget = kDefaultSearchBudget);

}  // namespace threshold
