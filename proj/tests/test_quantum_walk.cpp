#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "threshold/catalogue.hpp"
#include "threshold/error.hpp"
#include "threshold/quantum_walk.hpp"

using namespace threshold;

namespace {

constexpr double kFidelityTol = 1e-9;

SpectralDecomposition D(const char* bits) { return SpectralDecomposition(ThresholdGraph::parse(bits)); }

Eigen::VectorXd as_vector(const PureState& s, int n) { return s.normalized(n); }

}  // namespace

TEST(Nu2, Examples) {
  EXPECT_EQ(nu2(12), 2);
  EXPECT_EQ(nu2(8), 3);
  EXPECT_EQ(nu2(0), kInfiniteValuation);
  EXPECT_EQ(nu2(-6), 1);
  for (Int m = -200; m <= 200; ++m)
    if (m != 0) {
      EXPECT_EQ(nu2(m), oracle::valuation(m));
    }
}

TEST(Support, Examples) {
  EXPECT_EQ(support(D("0111"), PureState::pair(1, 2)), (std::vector<Int>{4}));
  EXPECT_EQ(support(D("0011"), PureState::pair(1, 3)), (std::vector<Int>{4, 2}));
  EXPECT_EQ(support(D("0011"), PureState::vertex(1)), (std::vector<Int>{4, 2, 0}));
}

TEST(StrongCospectral, Examples) {
  const auto a = strong_cospectral(D("0011"), PureState::pair(1, 3), PureState::pair(2, 3));
  ASSERT_TRUE(a.strongly_cospectral);
  EXPECT_EQ(a.partition->plus, (std::vector<Int>{4}));
  EXPECT_EQ(a.partition->minus, (std::vector<Int>{2}));
  EXPECT_FALSE(strong_cospectral(D("0011"), PureState::pair(1, 3), PureState::pair(2, 4))
                   .strongly_cospectral);
  EXPECT_FALSE(strong_cospectral(D("0001"), PureState::pair(1, 4), PureState::pair(2, 4))
                   .strongly_cospectral);
  EXPECT_THROW(strong_cospectral(D("0011"), PureState::pair(1, 3), PureState::pair(3, 1)), Error);
}

TEST(PairPst, Examples) {
  const auto a = pair_pst(D("0011"), PureState::pair(1, 3), PureState::pair(2, 3));
  ASSERT_TRUE(a.pst());
  EXPECT_EQ(a.g, 2);
  EXPECT_EQ(a.tau, Rational(1, 2));
  EXPECT_GE(a.fidelity, 1 - kFidelityTol);

  const auto b = pair_pst(D("01001111"), PureState::pair(1, 3), PureState::pair(2, 3));
  ASSERT_TRUE(b.pst());
  EXPECT_EQ(b.tau, Rational(1, 2));
  EXPECT_EQ(b.partition->minus, (std::vector<Int>{6}));
  // x^1 and x^2 are the only shared vectors meeting e_1 - e_3.
  EXPECT_EQ(b.partition->support, (std::vector<Int>{6, 4}));

  const auto c = pair_pst(D("00111"), PureState::pair(1, 3), PureState::pair(2, 3));
  ASSERT_TRUE(c.pst());
  EXPECT_EQ(c.partition->support, (std::vector<Int>{5, 3}));

  try {
    pair_pst(D("0111"), PureState::pair(1, 2), PureState::pair(3, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFixed);
  }
  EXPECT_THROW(pair_pst(D("0011"), PureState::vertex(1), PureState::vertex(2)), Error);
}

TEST(PairPst, FullSupportUsesAllEigenvalues) {
  const auto r = pair_pst(D("01001111"), PureState::pair(1, 8), PureState::pair(2, 8));
  ASSERT_TRUE(r.pst());
  EXPECT_EQ(r.partition->support, (std::vector<Int>{8, 6, 4}));
  EXPECT_EQ(r.g, 2);
}

TEST(ThresholdPairs, Examples) {
  EXPECT_TRUE(threshold_pst_pairs(D("0111")).empty());
  const auto a = threshold_pst_pairs(D("01001111"));
  ASSERT_EQ(a.size(), 6u);
  for (const auto& p : a) EXPECT_EQ(p.result.tau, Rational(1, 2));
  const auto b = threshold_pst_pairs(D("010011111111"));
  EXPECT_EQ(b.size(), 10u);
}

TEST(VertexPst, Examples) {
  EXPECT_FALSE(vertex_pst(D("001111")).present);
  const auto a = vertex_pst(D("0011"));
  ASSERT_TRUE(a.present);
  EXPECT_EQ(a.tau, Rational(1, 2));
  EXPECT_GE(a.fidelity, 1 - kFidelityTol);
  const auto b = vertex_pst(D("01001111"));
  ASSERT_TRUE(b.present);
  EXPECT_EQ(b.tau, Rational(1, 2));
  ASSERT_EQ(b.periodicity.size(), 6u);
  for (const auto& [v, f] : b.periodicity) EXPECT_GE(f, 1 - kFidelityTol) << v;
  try {
    vertex_pst(D("01"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooSmall);
  }
}

TEST(Walk, Examples) {
  const auto d = D("0011");
  EXPECT_NEAR(fidelity(d, PureState::pair(1, 3), PureState::pair(1, 3), 0.0), 1.0, kFidelityTol);
  EXPECT_TRUE(walk_operator(d, 0.0).isApprox(Eigen::MatrixXcd::Identity(4, 4)));
  const double half = std::numbers::pi / 2;
  EXPECT_NEAR(fidelity(d, PureState::pair(1, 3), PureState::pair(2, 3), half), 1.0, kFidelityTol);
  EXPECT_NEAR(fidelity(d, PureState::vertex(1), PureState::vertex(2), half), 1.0, kFidelityTol);
}

TEST(Walk, AgreesWithEigensolve) {
  for (const char* bits : {"0011", "01001111", "000111111111", "0101011", "0010111"}) {
    const auto d = D(bits);
    const auto lap = oracle::laplacian(bits);
    const int n = d.order();
    for (double t : {0.3, 1.0, 2.7}) {
      EXPECT_TRUE(walk_operator(d, t).isApprox(oracle::walk(lap, t), 1e-10)) << bits;
      for (int b = 3; b <= n; ++b) {
        const auto u = PureState::pair(1, b);
        const Eigen::VectorXcd want = oracle::walk(lap, t) * as_vector(u, n).cast<std::complex<double>>();
        EXPECT_LT((evolve(d, u, t) - want).norm(), 1e-10) << bits;
      }
    }
  }
}

// Supports never contain 0 for pair states and match the numeric projections.
TEST(Support, MatchesNumericProjections) {
  for (int n = 3; n <= 8; ++n)
    for (const auto& g : enumerate(n)) {
      const SpectralDecomposition d(g);
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
          const auto u = PureState::pair(a, b);
          const auto s = support(d, u);
          EXPECT_EQ(std::count(s.begin(), s.end(), 0), 0);
          for (Int mu : d.eigenvalues()) {
            const auto p = d.project(mu, u.representative(n));
            double norm = 0;
            for (const auto& x : p) norm += x.get_d() * x.get_d();
            const bool in = std::find(s.begin(), s.end(), mu) != s.end();
            EXPECT_EQ(in, std::sqrt(norm) > 1e-9) << g.sequence() << " " << u.text();
          }
        }
    }
}

TEST(PairPst, PhaseSymmetryAndMinimality) {
  for (int n = 3; n <= 9; ++n)
    for (const auto& g : enumerate(n)) {
      const SpectralDecomposition d(g);
      const auto lap = oracle::laplacian(g.sequence());
      for (const auto& p : exact_pst_pairs(d)) {
        const double tau = times_pi(p.result.tau);
        const Eigen::VectorXcd out = evolve(d, p.u, tau);
        const Eigen::VectorXcd target = p.v.normalized(n).cast<std::complex<double>>();
        const auto eta = std::polar(1.0, times_pi(p.result.phase));
        EXPECT_LT((out - eta * target).norm(), 1e-9) << g.sequence() << " b=" << p.b;
        EXPECT_NEAR(oracle::transfer_fidelity(lap, as_vector(p.v, n), as_vector(p.u, n), tau), 1.0,
                    kFidelityTol);
        EXPECT_LT(fidelity(d, p.u, p.v, tau / 2), 1 - 1e-6) << g.sequence() << " b=" << p.b;
      }
    }
}

TEST(PairPst, ExactAgreesWithNumericEverywhere) {
  for (int n = 3; n <= 8; ++n)
    for (const auto& g : enumerate(n)) {
      const SpectralDecomposition d(g);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
          oracle::laplacian(g.sequence()).cast<double>());
      const Eigen::MatrixXd& basis = es.eigenvectors();
      for (int b = 3; b <= n; ++b) {
        const auto u = PureState::pair(1, b), v = PureState::pair(2, b);
        if (support(d, u).size() <= 1) continue;
        const auto r = pair_pst(d, u, v);
        const Eigen::VectorXd cu = basis.transpose() * as_vector(u, n);
        const Eigen::VectorXd cv = basis.transpose() * as_vector(v, n);
        // Gaps lie in [1, n], so every transfer time is a multiple of pi/g
        // with g | 840, and the walk has period 2 pi.
        double best = 0;
        for (int j = 1; j <= 1680; ++j) {
          std::complex<double> amp = 0;
          for (int k = 0; k < n; ++k)
            amp += std::polar(1.0, es.eigenvalues()(k) * std::numbers::pi * j / 840.0) * cu(k) *
                   cv(k);
          best = std::max(best, std::abs(amp));
        }
        EXPECT_EQ(r.pst(), best > 1 - 1e-9) << g.sequence() << " b=" << b << " best=" << best;
      }
    }
}

TEST(PairTransferFromBlocks, AgreesWithExactCriterion) {
  for (int n = 3; n <= 12; ++n)
    for (const auto& g : enumerate(n)) {
      const SpectralDecomposition d(g);
      for (int b = 3; b <= n; ++b) {
        const auto u = PureState::pair(1, b), v = PureState::pair(2, b);
        if (support(d, u).size() <= 1) continue;
        const auto exact = pair_pst(d, u, v);
        const auto blocks = pair_transfer_from_blocks(g, b);
        ASSERT_EQ(blocks.has_value(), exact.pst()) << g.sequence() << " b=" << b;
        if (blocks) {
          EXPECT_EQ(*blocks, exact.tau);
        }
      }
    }
}

TEST(SharedEigenvalue, MatchesAssignment) {
  for (int n = 2; n <= 10; ++n)
    for (const auto& g : enumerate(n)) {
      const auto mu = assign_eigenvalues(g);
      for (int l = 1; l < n; ++l) EXPECT_EQ(shared_eigenvalue(g, l), mu.at(l)) << g.sequence();
    }
}

TEST(VertexPst, NeverDisagreesWithExactCriterion) {
  for (int n = 3; n <= 14; ++n)
    for (const auto& g : enumerate(n)) EXPECT_NO_THROW(vertex_pst(SpectralDecomposition(g)));
}

TEST(PureState, Validation) {
  EXPECT_THROW(PureState::pair(2, 2), Error);
  EXPECT_THROW(PureState::vertex(5).representative(4), Error);
  EXPECT_EQ(PureState::pair(1, 3).representative(4), (IntVector{1, 0, -1, 0}));
}
