#include "threshold/graph.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "threshold/error.hpp"

namespace threshold {

namespace {

std::vector<Block> split_blocks(const std::string& bits) {
  std::vector<Block> blocks;
  std::size_t i = 0;
  while (i < bits.size()) {
    Block b;
    while (i < bits.size() && bits[i] == '0') ++b.zeros, ++i;
    while (i < bits.size() && bits[i] == '1') ++b.ones, ++i;
    blocks.push_back(b);
  }
  return blocks;
}

}  // namespace

ThresholdGraph::ThresholdGraph(std::string bits) : bits_(std::move(bits)) {
  blocks_ = split_blocks(bits_);
}

ThresholdGraph ThresholdGraph::parse(std::string_view bits) {
  for (char c : bits)
    if (c != '0' && c != '1')
      throw Error(ErrorCode::kBadChar, "binary sequence contains '" + std::string(1, c) + "'");
  if (bits.size() < 2)
    throw Error(ErrorCode::kTooShort, "binary sequence needs at least 2 vertices");
  if (bits.front() != '0')
    throw Error(ErrorCode::kFirstBit, "b_1 must be 0 (vertex 1 is always added isolated)");
  if (bits.back() != '1')
    throw Error(ErrorCode::kDisconnected, "b_n = 0 gives a disconnected graph");
  return ThresholdGraph(std::string(bits));
}

ThresholdGraph ThresholdGraph::from_blocks(std::span<const Block> blocks) {
  if (blocks.empty()) throw Error(ErrorCode::kTooShort, "empty block form");
  std::string bits;
  for (const auto& b : blocks) {
    if (b.zeros < 1 || b.ones < 1)
      throw Error(ErrorCode::kParse, "block counts must be positive");
    bits.append(static_cast<std::size_t>(b.zeros), '0');
    bits.append(static_cast<std::size_t>(b.ones), '1');
  }
  return parse(bits);
}

ThresholdGraph ThresholdGraph::parse_block_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token, bits;
  while (in >> token) {
    const auto caret = token.find('^');
    if (caret != 1 || (token[0] != '0' && token[0] != '1') || caret + 1 >= token.size())
      throw Error(ErrorCode::kParse, "bad block token '" + token + "'");
    const std::string count = token.substr(caret + 1);
    if (!std::all_of(count.begin(), count.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw Error(ErrorCode::kParse, "bad multiplicity in '" + token + "'");
    const int k = std::stoi(count);
    if (k < 1) throw Error(ErrorCode::kParse, "multiplicity must be positive in '" + token + "'");
    bits.append(static_cast<std::size_t>(k), token[0]);
  }
  return parse(bits);
}

int ThresholdGraph::trace() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), '1'));
}

bool ThresholdGraph::adjacent(int u, int v) const {
  if (u == v) return false;
  // The later vertex decides: a dominating vertex sees everything created before it.
  return dominating(std::max(u, v));
}

int ThresholdGraph::degree(int v) const {
  int d = dominating(v) ? v - 1 : 0;
  for (int w = v + 1; w <= order(); ++w)
    if (dominating(w)) ++d;
  return d;
}

IntMatrix laplacian(const ThresholdGraph& g) {
  const int n = g.order();
  IntMatrix l(n, n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (g.adjacent(u, v)) {
        l(u - 1, v - 1) = l(v - 1, u - 1) = -1;
        ++l(u - 1, u - 1);
        ++l(v - 1, v - 1);
      }
  return l;
}

DegreeData degree_data(const ThresholdGraph& g) {
  DegreeData d;
  for (int v = 1; v <= g.order(); ++v) d.degrees.push_back(g.degree(v));
  std::sort(d.degrees.begin(), d.degrees.end(), std::greater<>());
  d.trace = g.trace();
  return d;
}

namespace {

constexpr std::string_view kJoinOp = "∨";
constexpr std::string_view kUnionOp = "⊔";

std::string clique(int k) { return "K" + std::to_string(k); }
std::string coclique(int k) { return "K" + std::to_string(k) + "^c"; }

}  // namespace

std::string join_expression(const ThresholdGraph& g) {
  const auto blocks = g.blocks();
  std::string expr;
  bool compound = false;
  if (blocks[0].zeros == 1) {
    expr = clique(blocks[0].ones + 1);
  } else {
    expr = coclique(blocks[0].zeros) + " " + std::string(kJoinOp) + " " + clique(blocks[0].ones);
    compound = true;
  }
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    const std::string lhs = compound ? "(" + expr + ")" : expr;
    expr = "(" + lhs + " " + std::string(kUnionOp) + " " + coclique(blocks[i].zeros) + ") " +
           std::string(kJoinOp) + " " + clique(blocks[i].ones);
    compound = true;
  }
  return expr;
}

std::vector<Block> parse_join_expression(std::string_view text) {
  // Collect the K-terms in order; the operators between them are fixed by the form.
  struct Term {
    int size;
    bool complement;
  };
  std::vector<Term> terms;
  std::size_t joins = 0, unions = 0;
  for (std::size_t i = 0; i < text.size();) {
    if (text[i] == 'K') {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i + 1) throw Error(ErrorCode::kParse, "K without size");
      Term t{std::stoi(std::string(text.substr(i + 1, j - i - 1))), false};
      if (text.substr(j, 2) == "^c") {
        t.complement = true;
        j += 2;
      }
      terms.push_back(t);
      i = j;
    } else if (text.substr(i, kJoinOp.size()) == kJoinOp) {
      ++joins;
      i += kJoinOp.size();
    } else if (text.substr(i, kUnionOp.size()) == kUnionOp) {
      ++unions;
      i += kUnionOp.size();
    } else if (text[i] == ' ' || text[i] == '(' || text[i] == ')') {
      ++i;
    } else {
      throw Error(ErrorCode::kParse, "unexpected character in join expression");
    }
  }
  if (terms.empty()) throw Error(ErrorCode::kParse, "empty join expression");

  std::vector<Block> blocks;
  std::size_t next = 0;
  if (!terms[0].complement) {
    if (terms[0].size < 2) throw Error(ErrorCode::kParse, "leading clique needs at least 2 vertices");
    blocks.push_back({1, terms[0].size - 1});
    next = 1;
  } else {
    if (terms.size() < 2 || terms[1].complement)
      throw Error(ErrorCode::kParse, "leading coclique must be joined to a clique");
    blocks.push_back({terms[0].size, terms[1].size});
    next = 2;
  }
  for (; next < terms.size(); next += 2) {
    if (next + 1 >= terms.size() || !terms[next].complement || terms[next + 1].complement)
      throw Error(ErrorCode::kParse, "expected coclique/clique pair");
    blocks.push_back({terms[next].size, terms[next + 1].size});
  }
  const std::size_t expected_joins = blocks.size() - (terms[0].complement ? 0 : 1);
  if (joins != expected_joins || unions != blocks.size() - 1)
    throw Error(ErrorCode::kParse, "operator count does not match a threshold form");
  for (const auto& b : blocks)
    if (b.zeros < 1 || b.ones < 1) throw Error(ErrorCode::kParse, "block sizes must be positive");
  return blocks;
}

std::string block_text(const ThresholdGraph& g) {
  std::string out;
  for (const auto& b : g.blocks()) {
    if (!out.empty()) out += ' ';
    out += "0^" + std::to_string(b.zeros) + " 1^" + std::to_string(b.ones);
  }
  return out;
}

std::string to_dot(const ThresholdGraph& g) {
  std::ostringstream out;
  out << "graph \"" << g.sequence() << "\" {\n";
  for (int v = 1; v <= g.order(); ++v)
    out << "  " << v << " [shape=" << (g.dominating(v) ? "box" : "circle") << "];\n";
  for (int u = 1; u <= g.order(); ++u)
    for (int v = u + 1; v <= g.order(); ++v)
      if (g.adjacent(u, v)) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace threshold
