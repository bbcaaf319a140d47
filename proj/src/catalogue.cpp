#include "threshold/catalogue.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "threshold/error.hpp"
#include "threshold/simply_structured.hpp"
#include "threshold/spectral.hpp"

namespace threshold {

std::uint64_t graph_count(int n) {
  if (n < 2 || n > 62) throw Error(ErrorCode::kPrecondition, "need 2 <= n <= 62");
  return std::uint64_t{1} << (n - 2);
}

std::string sequence_at(int n, std::uint64_t index) {
  if (index >= graph_count(n)) throw Error(ErrorCode::kPrecondition, "index out of range");
  std::string bits(n, '0');
  bits[n - 1] = '1';
  for (int i = 0; i < n - 2; ++i)
    if ((index >> (n - 3 - i)) & 1U) bits[i + 1] = '1';
  return bits;
}

std::vector<ThresholdGraph> enumerate(int n) {
  std::vector<ThresholdGraph> out;
  const auto count = graph_count(n);
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(ThresholdGraph::parse(sequence_at(n, i)));
  return out;
}

std::string_view whd_text(WhdStatus s) {
  switch (s) {
    case WhdStatus::kYes:
      return "yes";
    case WhdStatus::kUnknown:
      return "unknown";
    case WhdStatus::kNo:
      return "no";
  }
  return "";
}

CatalogueRecord analyze(const ThresholdGraph& g, const CatalogueOptions& options) {
  CatalogueRecord rec;
  rec.n = g.order();
  rec.sequence = g.sequence();
  rec.expression = join_expression(g);
  rec.ss = is_simply_structured(g).simply_structured;

  if (!rec.ss) {
    rec.whd = WhdStatus::kNo;
    rec.whd_notes.push_back("not simply structured");
  } else if (options.with_whd) {
    auto built = whd_construct(g, options.whd_search_budget);
    rec.whd = built.certificate ? WhdStatus::kYes
                                : (built.proven_absent ? WhdStatus::kNo : WhdStatus::kUnknown);
    rec.whd_notes = built.certificate ? built.certificate->provenance() : built.trace;
    rec.certificate = std::move(built.certificate);
  }

  if (options.with_pst) {
    const SpectralDecomposition d(g);
    rec.pst = exact_pst_pairs(d);
    if (g.order() >= 3) rec.vertex = vertex_pst(d);
    for (const auto& p : rec.pst)
      if (!rec.min_time || p.result.tau < *rec.min_time) rec.min_time = p.result.tau;
    if (rec.vertex && rec.vertex->present && (!rec.min_time || rec.vertex->tau < *rec.min_time))
      rec.min_time = rec.vertex->tau;
  }
  return rec;
}

std::vector<std::pair<std::string, std::string>> spectrum_collisions(int n) {
  if (n > kSpectrumCheckMaxOrder)
    throw Error(ErrorCode::kTooLarge, "spectrum cross-check is limited to n <= " +
                                          std::to_string(kSpectrumCheckMaxOrder));
  std::map<std::vector<Int>, std::string> seen;
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& g : enumerate(n)) {
    std::vector<Int> key;
    for (const auto& e : spectrum(g)) {
      key.push_back(e.value);
      key.push_back(e.multiplicity);
    }
    const auto [it, fresh] = seen.emplace(key, g.sequence());
    if (!fresh) out.emplace_back(it->second, g.sequence());
  }
  return out;
}

namespace {

struct Task {
  int n;
  std::uint64_t begin;
  std::uint64_t end;
};

std::vector<CatalogueRecord> run_task(const Task& t, const CatalogueOptions& options) {
  std::vector<CatalogueRecord> out;
  for (std::uint64_t i = t.begin; i < t.end; ++i) {
    const auto g = ThresholdGraph::parse(sequence_at(t.n, i));
    if (options.ss_only && !is_simply_structured(g).simply_structured) {
      continue;
    }
    out.push_back(analyze(g, options));
  }
  return out;
}

}  // namespace

Catalogue catalogue(int n_min, int n_max, const CatalogueOptions& options) {
  if (n_min < 2 || n_max < n_min) throw Error(ErrorCode::kPrecondition, "need 2 <= n_min <= n_max");

  constexpr std::uint64_t kChunk = 4096;
  std::vector<Task> tasks;
  for (int n = n_min; n <= n_max; ++n)
    for (std::uint64_t b = 0; b < graph_count(n); b += kChunk)
      tasks.push_back({n, b, std::min(graph_count(n), b + kChunk)});

  unsigned workers = options.threads ? options.threads : std::thread::hardware_concurrency();
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(tasks.size())));

  std::vector<std::vector<CatalogueRecord>> results(tasks.size());
  std::vector<std::exception_ptr> failures(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < tasks.size(); i += workers)
          results[i] = run_task(tasks[i], options);
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& f : failures)
    if (f) std::rethrow_exception(f);

  Catalogue out;
  for (int n = n_min; n <= n_max; ++n) out.summary.push_back({n, graph_count(n)});
  for (auto& chunk : results)
    for (auto& rec : chunk) {
      auto& s = out.summary[rec.n - n_min];
      if (rec.ss) ++s.ss;
      if (rec.ss) {
        if (rec.whd == WhdStatus::kYes) ++s.whd_yes;
        if (rec.whd == WhdStatus::kUnknown) ++s.whd_unknown;
      }
      if (rec.whd == WhdStatus::kNo) ++s.whd_no;
      if (!rec.pst.empty()) ++s.pst;
      if (rec.vertex && rec.vertex->present) ++s.vertex_pst;
      out.records.push_back(std::move(rec));
    }
  return out;
}

}  // namespace threshold
