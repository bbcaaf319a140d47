#include <algorithm>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "threshold/catalogue.hpp"
#include "threshold/error.hpp"
#include "threshold/simply_structured.hpp"
#include "threshold/spectral.hpp"

using namespace threshold;

namespace {

ThresholdGraph G(const char* bits) { return ThresholdGraph::parse(bits); }

IntVector e(int n, std::initializer_list<std::pair<int, Int>> entries) {
  IntVector v(n, 0);
  for (auto [i, x] : entries) v[i - 1] = x;
  return v;
}

Eigen::MatrixXi to_eigen(const IntMatrix& m) {
  Eigen::MatrixXi out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = static_cast<int>(m(i, j));
  return out;
}

int ceil_half(int x) { return (x + 1) / 2; }

}  // namespace

TEST(GroupBoundaries, Examples) {
  auto gb = group_boundaries(G("0011"));
  EXPECT_EQ(gb.groups, (std::vector<EigenGroup>{{4, 2, 3}, {2, 1, 1}}));
  EXPECT_EQ(gb.kernel_index, 4);
  EXPECT_EQ(group_boundaries(G("0111")).groups, (std::vector<EigenGroup>{{4, 1, 3}}));
  EXPECT_EQ(group_boundaries(G("0001")).groups,
            (std::vector<EigenGroup>{{4, 3, 3}, {1, 1, 2}}));
}

TEST(Decision, Examples) {
  EXPECT_TRUE(is_simply_structured(G("000111111111")).simply_structured);
  const auto v = is_simply_structured(G("0101"));
  EXPECT_FALSE(v.simply_structured);
  ASSERT_TRUE(v.violation);
  EXPECT_EQ(v.violation->constraint, SsViolation::Constraint::kBlockCount);
  EXPECT_EQ(v.violation->actual, 2);
  EXPECT_EQ(v.violation->upper, 1);

  const auto w = is_simply_structured(G("0000011"));
  EXPECT_FALSE(w.simply_structured);
  ASSERT_TRUE(w.violation);
  EXPECT_EQ(w.violation->index, 1);
}

TEST(GroupBasis, Examples) {
  EXPECT_EQ(ss_group_basis(2, 4, 4),
            (std::vector<IntVector>{e(4, {{3, 1}, {4, -1}}), e(4, {{1, 1}, {2, 1}, {3, -1}, {4, -1}})}));
  EXPECT_EQ(ss_group_basis(1, 3, 4),
            (std::vector<IntVector>{e(4, {{1, 1}, {2, -1}}), e(4, {{2, 1}, {3, -1}})}));
  try {
    ss_group_basis(3, 5, 10);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kNotSsGroup);
  }
}

TEST(Eigenbasis, Examples) {
  const auto b = ss_eigenbasis(G("0011"));
  ASSERT_EQ(b.vectors.size(), 4u);
  EXPECT_EQ(b.vectors.back(), IntVector(4, 1));
  EXPECT_EQ(b.eigenvalues.back(), 0);
  std::vector<Int> mus = b.eigenvalues;
  std::sort(mus.begin(), mus.end());
  EXPECT_EQ(mus, (std::vector<Int>{0, 2, 4, 4}));

  const auto k4 = ss_eigenbasis(G("0111"));
  EXPECT_EQ(k4.eigenvalues, (std::vector<Int>{4, 4, 4, 0}));

  try {
    ss_eigenbasis(G("0101"));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kNotSs);
  }
}

TEST(Oracle, Examples) {
  EXPECT_TRUE(ss_oracle(G("0011")));
  EXPECT_FALSE(ss_oracle(G("0101")));
  EXPECT_TRUE(ss_oracle(G("01")));
  EXPECT_THROW(ss_oracle(G("0000000000000")), Error);
}

// The library oracle parameterises each eigenspace by null-space coordinates;
// here every one of the 3^n vectors is tried instead.
TEST(Oracle, AgreesWithFullTernaryEnumeration) {
  for (int n = 2; n <= 8; ++n)
    for (const auto& bits : oracle::sequences(n)) {
      const auto g = ThresholdGraph::parse(bits);
      EXPECT_EQ(ss_oracle(g), oracle::ternary_basis_exists(to_eigen(laplacian(g)))) << bits;
    }
}

TEST(Decision, AgreesWithOracle) {
  for (int n = 3; n <= 12; ++n)
    for (const auto& bits : oracle::sequences(n)) {
      const auto g = ThresholdGraph::parse(bits);
      const auto v = is_simply_structured(g);
      ASSERT_EQ(v.simply_structured, ss_oracle(g)) << bits;
      EXPECT_EQ(v.violation.has_value(), !v.simply_structured);
    }
}

TEST(Eigenbasis, ExactForEverySimplyStructuredGraph) {
  for (int n = 2; n <= 20; ++n)
    for (const auto& g : enumerate(n)) {
      if (!is_simply_structured(g).simply_structured) continue;
      const auto b = ss_eigenbasis(g);
      ASSERT_EQ(b.vectors.size(), static_cast<std::size_t>(n));
      const auto lap = laplacian(g);
      for (std::size_t k = 0; k < b.vectors.size(); ++k) {
        const auto& v = b.vectors[k];
        ASSERT_TRUE(std::all_of(v.begin(), v.end(), [](Int x) { return x >= -1 && x <= 1; }));
        const auto lv = multiply(lap, v);
        for (int i = 0; i < n; ++i) ASSERT_EQ(lv[i], b.eigenvalues[k] * v[i]) << g.sequence();
      }
      ASSERT_EQ(rank(b.matrix()), static_cast<std::size_t>(n)) << g.sequence();
    }
}

TEST(Groups, MinimumDimensions) {
  for (int n = 3; n <= 20; ++n)
    for (const auto& g : enumerate(n)) {
      if (!is_simply_structured(g).simply_structured) continue;
      const auto gb = group_boundaries(g);
      const auto& top = gb.groups.front();
      EXPECT_EQ(top.eigenvalue, n);
      EXPECT_GE(top.size(), ceil_half(n)) << g.sequence();
      const int l1 = top.first;
      for (const auto& grp : gb.groups)
        if (grp.eigenvalue == n - l1) {
          EXPECT_GE(grp.size(), ceil_half(l1)) << g.sequence();
        }
    }
}

TEST(Decision, FewBlocksAtLargerSizes) {
  for (int n = 16; n <= 20; ++n)
    for (const auto& g : enumerate(n))
      if (is_simply_structured(g).simply_structured) {
        EXPECT_LE(g.block_count(), 2) << g.sequence();
      }
}
