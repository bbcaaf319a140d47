#pragma once

// Connected threshold graphs built from binary creation sequences.
//
// Vertex i (1-based, creation order) is isolated when added if b_i = 0 and
// dominating if b_i = 1. The sequence always starts with 0 and must end
// with 1; it factors uniquely as 0^{s_1} 1^{t_1} ... 0^{s_r} 1^{t_r}.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "threshold/linalg.hpp"

namespace threshold {

struct Block {
  int zeros = 0;  // s_i
  int ones = 0;   // t_i
  friend bool operator==(const Block&, const Block&) = default;
};

class ThresholdGraph {
 public:
  /// Parses a '0'/'1' string. Errors: E_BAD_CHAR, E_TOO_SHORT, E_FIRST_BIT, E_DISCONNECTED.
  static ThresholdGraph parse(std::string_view bits);
  /// Builds from (s_i, t_i) pairs; every count must be positive.
  static ThresholdGraph from_blocks(std::span<const Block> blocks);
  /// Parses the block text format, e.g. "0^2 1^3 0^1 1^4".
  static ThresholdGraph parse_block_text(std::string_view text);

  int order() const { return static_cast<int>(bits_.size()); }
  const std::string& sequence() const { return bits_; }
  std::span<const Block> blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  /// Number of dominating vertices, tr(G).
  int trace() const;

  /// b_v for a 1-based vertex.
  bool dominating(int v) const { return bits_.at(v - 1) == '1'; }
  bool adjacent(int u, int v) const;
  int degree(int v) const;

  friend bool operator==(const ThresholdGraph& a, const ThresholdGraph& b) {
    return a.bits_ == b.bits_;
  }

 private:
  explicit ThresholdGraph(std::string bits);

  std::string bits_;
  std::vector<Block> blocks_;
};

/// L(G) = D(G) - A(G), vertices in creation order.
IntMatrix laplacian(const ThresholdGraph& g);

struct DegreeData {
  std::vector<Int> degrees;  // non-increasing
  int trace = 0;
};
DegreeData degree_data(const ThresholdGraph& g);

/// Nested join/union form, e.g. "(K2 ⊔ K2^c) ∨ K6".
std::string join_expression(const ThresholdGraph& g);
/// Inverse of join_expression.
std::vector<Block> parse_join_expression(std::string_view text);

/// "0^2 1^3" style rendering of the block form.
std::string block_text(const ThresholdGraph& g);

/// Graphviz rendering of the adjacency structure, vertices labelled by creation index.
std::string to_dot(const ThresholdGraph& g);

}  // namespace threshold
