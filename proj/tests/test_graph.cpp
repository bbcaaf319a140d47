#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "threshold/error.hpp"
#include "threshold/graph.hpp"

using namespace threshold;

namespace {

ErrorCode parse_error(const std::string& bits) {
  try {
    ThresholdGraph::parse(bits);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << bits << " parsed";
  return ErrorCode::kParse;
}

IntMatrix from_eigen(const Eigen::MatrixXi& m) {
  IntMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

}  // namespace

TEST(Parse, BlocksOfCompleteGraph) {
  const auto g = ThresholdGraph::parse("0111");
  ASSERT_EQ(g.block_count(), 1);
  EXPECT_EQ(g.blocks()[0], (Block{1, 3}));
  EXPECT_EQ(join_expression(g), "K4");
}

TEST(Parse, SmallestGraph) {
  const auto g = ThresholdGraph::parse("01");
  EXPECT_EQ(g.order(), 2);
  EXPECT_EQ(g.blocks()[0], (Block{1, 1}));
}

TEST(Parse, Rejections) {
  EXPECT_EQ(parse_error("0110"), ErrorCode::kDisconnected);
  EXPECT_EQ(parse_error("1011"), ErrorCode::kFirstBit);
  EXPECT_EQ(parse_error("0"), ErrorCode::kTooShort);
  EXPECT_EQ(parse_error("0121"), ErrorCode::kBadChar);
}

TEST(Parse, BlockTextRoundTrip) {
  for (int n = 2; n <= 10; ++n)
    for (const auto& bits : oracle::sequences(n)) {
      const auto g = ThresholdGraph::parse(bits);
      EXPECT_EQ(ThresholdGraph::parse_block_text(block_text(g)).sequence(), bits);
      EXPECT_EQ(ThresholdGraph::from_blocks(g.blocks()).sequence(), bits);
      const auto blocks = parse_join_expression(join_expression(g));
      EXPECT_EQ(ThresholdGraph::from_blocks(blocks).sequence(), bits) << join_expression(g);
    }
}

TEST(Laplacian, Examples) {
  const auto k2 = laplacian(ThresholdGraph::parse("01"));
  EXPECT_EQ(k2(0, 0), 1);
  EXPECT_EQ(k2(0, 1), -1);

  const auto l = laplacian(ThresholdGraph::parse("0011"));
  const std::vector<Int> diag{2, 2, 3, 3};
  const std::set<std::pair<int, int>> edges{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == j)
        EXPECT_EQ(l(i, j), diag[i]);
      else
        EXPECT_EQ(l(i, j), edges.count({std::min(i, j), std::max(i, j)}) ? -1 : 0);
    }

  const auto k4 = laplacian(ThresholdGraph::parse("0111"));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(k4(i, j), i == j ? 3 : -1);
}

TEST(Degrees, Examples) {
  auto dd = degree_data(ThresholdGraph::parse("0101"));
  EXPECT_EQ(dd.degrees, (std::vector<Int>{3, 2, 2, 1}));
  EXPECT_EQ(dd.trace, 2);
  dd = degree_data(ThresholdGraph::parse("0111"));
  EXPECT_EQ(dd.degrees, (std::vector<Int>{3, 3, 3, 3}));
  EXPECT_EQ(dd.trace, 3);
  dd = degree_data(ThresholdGraph::parse("0001"));
  EXPECT_EQ(dd.degrees, (std::vector<Int>{3, 1, 1, 1}));
  EXPECT_EQ(dd.trace, 1);
}

TEST(JoinExpression, Examples) {
  EXPECT_EQ(join_expression(ThresholdGraph::parse("0011")), "K2^c ∨ K2");
  const auto g = ThresholdGraph::parse("0100111111");
  EXPECT_EQ(g.blocks()[1], (Block{2, 6}));
  EXPECT_EQ(join_expression(g), "(K2 ⊔ K2^c) ∨ K6");
}

TEST(Laplacian, MatchesEdgeByEdgeConstruction) {
  for (int n = 2; n <= 12; ++n)
    for (const auto& bits : oracle::sequences(n)) {
      const auto g = ThresholdGraph::parse(bits);
      const auto l = laplacian(g);
      ASSERT_EQ(l, from_eigen(oracle::laplacian(bits))) << bits;
      auto degrees = degree_data(g).degrees;
      std::vector<Int> diag;
      for (int i = 0; i < n; ++i) {
        Int row = 0;
        for (int j = 0; j < n; ++j) {
          row += l(i, j);
          EXPECT_EQ(l(i, j), l(j, i));
        }
        EXPECT_EQ(row, 0);
        diag.push_back(l(i, i));
        EXPECT_EQ(l(i, i), g.degree(i + 1));
      }
      std::sort(diag.rbegin(), diag.rend());
      EXPECT_EQ(diag, degrees) << bits;
    }
}

TEST(Laplacian, DistinctSequencesGiveDistinctMatrices) {
  for (int n = 2; n <= 10; ++n) {
    std::set<std::vector<Int>> seen;
    for (const auto& bits : oracle::sequences(n)) {
      const auto l = laplacian(ThresholdGraph::parse(bits));
      std::vector<Int> flat;
      for (std::size_t i = 0; i < l.rows(); ++i)
        flat.insert(flat.end(), l.row(i).begin(), l.row(i).end());
      EXPECT_TRUE(seen.insert(flat).second) << bits;
    }
  }
}

TEST(Dot, ListsEveryEdge) {
  const auto dot = to_dot(ThresholdGraph::parse("0011"));
  EXPECT_NE(dot.find("graph"), std::string::npos);
  EXPECT_NE(dot.find("3 -- 4"), std::string::npos);
}
