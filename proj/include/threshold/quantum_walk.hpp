#pragma once

// Laplacian continuous-time quantum walks U(t) = exp(itL) on threshold graphs:
// eigenvalue supports, strong cospectrality, and perfect state transfer
// decided exactly by the 2-adic criterion, with a floating-point oracle.
//
// Exact work uses coordinates in the shared basis x^1..x^n. The x^l are
// mutually orthogonal, so E_mu u = +-E_mu v holds iff x^l.u = +-x^l.v for
// every l in the eigenvalue group of mu.

#include <climits>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "threshold/graph.hpp"
#include "threshold/linalg.hpp"
#include "threshold/spectral.hpp"

namespace threshold {

class PureState {
 public:
  enum class Kind { kVertex, kPair };

  static PureState vertex(int a);
  /// (e_a - e_b)/sqrt(2); requires a != b.
  static PureState pair(int a, int b);

  Kind kind() const { return kind_; }
  int a() const { return a_; }
  int b() const { return b_; }

  /// Unnormalised integer vector e_a or e_a - e_b. Throws E_PRECONDITION if out of range.
  IntVector representative(int n) const;
  Eigen::VectorXd normalized(int n) const;
  std::string text() const;

  friend bool operator==(const PureState&, const PureState&) = default;

 private:
  PureState(Kind kind, int a, int b) : kind_(kind), a_(a), b_(b) {}
  Kind kind_;
  int a_;
  int b_;
};

inline constexpr int kInfiniteValuation = INT_MAX;

/// 2-adic valuation; nu2(0) = kInfiniteValuation.
int nu2(Int m);

/// Eigenvalue support of a state, descending.
std::vector<Int> support(const SpectralDecomposition& d, const PureState& u);

struct SupportPartition {
  std::vector<Int> support;  // descending
  std::vector<Int> plus;     // E_mu u = E_mu v
  std::vector<Int> minus;    // E_mu u = -E_mu v
};

struct Cospectrality {
  bool strongly_cospectral = false;
  std::optional<SupportPartition> partition;
  /// First eigenvalue where E_mu u != +-E_mu v (absent when a state is fixed).
  std::optional<Int> witness;
  std::string reason;
};

/// Eigenvalue whose eigenspace contains x^1.
Int structural_theta(const SpectralDecomposition& d);

/// Exact comparison over the support. For u = pair(1,b), v = pair(2,b) the
/// block-form prediction (s_1 = t_1 = 1 or s_1 = 2, minus part {theta}) is
/// evaluated too; disagreement throws E_VERIFY_FAILED.
Cospectrality strong_cospectral(const SpectralDecomposition& d, const PureState& u,
                                const PureState& v);

struct PstResult {
  enum class Verdict { kPst, kNoPst, kFixed };
  Verdict verdict = Verdict::kNoPst;
  std::string reason;
  std::optional<SupportPartition> partition;
  Int g = 0;
  Rational tau;    // minimum time / pi
  Rational phase;  // arg(eta) / pi, in [0, 2)
  double fidelity = 0.0;      // |v^T U(tau) u| from the numeric oracle
  double phase_error = 0.0;   // |U(tau) u - eta v|
  bool pst() const { return verdict == Verdict::kPst; }
};

/// Exact transfer criterion for real states on a Laplacian integral graph:
/// strong cospectrality, then either |support| = 2 or the 2-adic condition
/// over plus x minus. Fixed states give kFixed. No numeric work.
PstResult state_transfer(const SpectralDecomposition& d, const PureState& u, const PureState& v);

/// Pair-state transfer with the numeric fidelity attached on success.
/// Throws E_FIXED if u or v is fixed, E_PRECONDITION unless both are pair states with u != +-v.
PstResult pair_pst(const SpectralDecomposition& d, const PureState& u, const PureState& v);

struct PairTransfer {
  int b = 0;
  PureState u;
  PureState v;
  PstResult result;
};

/// Block-form conditions for transfer between pair(1,b) and pair(2,b).
bool pair_conditions_hold(const ThresholdGraph& g);

/// Eigenvalue of x^l (1 <= l < n) read from the sequence: t_k + ... + t_r when
/// vertex l+1 lies in zero block k, n - s_{k+1} - ... - s_r when it lies in one block k.
Int shared_eigenvalue(const ThresholdGraph& g, int l);

/// Transfer between pair(1,b) and pair(2,b) decided from the sequence alone:
/// the 2-adic condition over the eigenvalues of x^1..x^{b-1}, which is the
/// support of pair(1,b). Returns the minimum time / pi, or nullopt.
std::optional<Rational> pair_transfer_from_blocks(const ThresholdGraph& g, int b);

/// All b = 3..n when the block-form conditions hold, each confirmed by
/// pair_pst (E_VERIFY_FAILED otherwise); empty otherwise.
std::vector<PairTransfer> threshold_pst_pairs(const SpectralDecomposition& d);

/// pair_pst for every b = 3..n with non-fixed states; the transfers found.
std::vector<PairTransfer> exact_pst_pairs(const SpectralDecomposition& d);

struct VertexPst {
  bool present = false;
  std::string reason;
  Rational tau;  // / pi, when present
  double fidelity = 0.0;
  /// |<e_b|U(tau)|e_b>| for b = 3..n, when present.
  std::vector<std::pair<int, double>> periodicity;
};

/// Vertex transfer 1 -> 2 from the block form, cross-checked against the exact
/// criterion (E_VERIFY_FAILED on disagreement). E_TOO_SMALL for n = 2.
VertexPst vertex_pst(const SpectralDecomposition& d);

/// U(t) = sum_mu exp(i mu t) E_mu from the exact projections.
Eigen::MatrixXcd walk_operator(const SpectralDecomposition& d, double t);

/// U(t) applied to a state, in floating point from shared-basis coordinates.
Eigen::VectorXcd evolve(const SpectralDecomposition& d, const PureState& u, double t);

/// |dst^T U(t) src| for normalised states.
double fidelity(const SpectralDecomposition& d, const PureState& src, const PureState& dst,
                double t);

/// pi * q as a double.
double times_pi(const Rational& q);

}  // namespace threshold
