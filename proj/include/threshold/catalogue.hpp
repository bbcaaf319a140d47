#pragma once

// Exhaustive enumeration of connected threshold graphs and per-graph
// classification (simply structured, weak Hadamard, pair/vertex transfer).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "threshold/graph.hpp"
#include "threshold/quantum_walk.hpp"
#include "threshold/weak_hadamard.hpp"

namespace threshold {

/// Number of connected threshold graphs on n vertices, 2^{n-2}.
std::uint64_t graph_count(int n);

/// The index-th sequence of length n in lexicographic order: bits b_2..b_{n-1}
/// spell `index` in binary, most significant first.
std::string sequence_at(int n, std::uint64_t index);

/// All 2^{n-2} connected threshold graphs on n >= 2 vertices, lexicographic.
std::vector<ThresholdGraph> enumerate(int n);

inline constexpr int kSpectrumCheckMaxOrder = 10;

/// Pairs of distinct sequences of length n with equal Laplacian spectra.
/// Throws E_TOO_LARGE above kSpectrumCheckMaxOrder.
std::vector<std::pair<std::string, std::string>> spectrum_collisions(int n);

enum class WhdStatus { kYes, kUnknown, kNo };
std::string_view whd_text(WhdStatus s);

struct CatalogueRecord {
  int n = 0;
  std::string sequence;
  std::string expression;
  bool ss = false;
  WhdStatus whd = WhdStatus::kUnknown;
  std::optional<WhdCertificate> certificate;
  std::vector<std::string> whd_notes;
  std::vector<PairTransfer> pst;
  /// Empty for n = 2, where the vertex analysis does not apply.
  std::optional<VertexPst> vertex;
  /// Smallest transfer time / pi over pair and vertex transfers.
  std::optional<Rational> min_time;
};

struct CatalogueOptions {
  std::size_t whd_search_budget = kDefaultSearchBudget;
  bool ss_only = false;
  bool with_whd = true;
  bool with_pst = true;
  /// 0 = std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct SizeSummary {
  int n = 0;
  std::size_t graphs = 0;
  std::size_t ss = 0;
  std::size_t whd_yes = 0;
  std::size_t whd_unknown = 0;
  std::size_t whd_no = 0;
  std::size_t pst = 0;
  std::size_t vertex_pst = 0;
};

struct Catalogue {
  std::vector<CatalogueRecord> records;
  std::vector<SizeSummary> summary;
};

CatalogueRecord analyze(const ThresholdGraph& g, const CatalogueOptions& options = {});

/// Records for n_min..n_max in enumeration order. Chunks of the index range
/// are analysed in parallel and merged in order, so output is deterministic.
Catalogue catalogue(int n_min, int n_max, const CatalogueOptions& options = {});

}  // namespace threshold
