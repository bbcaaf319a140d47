// Command-line front end: analyze single graphs, enumerate catalogues.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "threshold/catalogue.hpp"
#include "threshold/error.hpp"
#include "threshold/io.hpp"
#include "threshold/quantum_walk.hpp"
#include "threshold/simply_structured.hpp"
#include "threshold/spectral.hpp"
#include "threshold/weak_hadamard.hpp"

namespace {

using namespace threshold;

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

// "-" means stdout.
template <typename Fn>
void write_to(const std::string& path, Fn&& fn) {
  if (path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kParse, "cannot write " + path);
  fn(out);
}

void print_matrix(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto s = std::to_string(m(i, j));
      std::cout << std::string(j ? 4 - s.size() : 3 - s.size(), ' ') << s;
    }
    std::cout << '\n';
  }
}

void print_summary(const Catalogue& c, std::ostream& os) {
  os << "n,graphs,ss,whd_yes,whd_unknown,whd_no,pst,vertex_pst\n";
  for (const auto& s : c.summary)
    os << s.n << ',' << s.graphs << ',' << s.ss << ',' << s.whd_yes << ',' << s.whd_unknown
       << ',' << s.whd_no << ',' << s.pst << ',' << s.vertex_pst << '\n';
}

int cmd_analyze(const std::string& bits, bool json) {
  const auto g = ThresholdGraph::parse(bits);
  const auto rec = analyze(g);
  const auto spec = spectrum(g);
  if (json) {
    auto j = to_json(rec);
    j["blocks"] = block_text(g);
    j["spectrum"] = to_json(spec);
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  const auto ss = is_simply_structured(g);
  std::cout << "sequence    " << g.sequence() << '\n'
            << "blocks      " << block_text(g) << '\n'
            << "expression  " << rec.expression << '\n'
            << "spectrum    " << spectrum_text(spec) << '\n'
            << "ss          " << (ss.simply_structured ? "yes" : "no");
  if (ss.violation) std::cout << " (" << ss.violation->describe() << ')';
  std::cout << "\nwhd         " << whd_text(rec.whd) << '\n';
  for (const auto& note : rec.whd_notes) std::cout << "            " << note << '\n';
  std::cout << "pst pairs   " << (rec.pst.empty() ? "none" : pst_pairs_text(rec.pst)) << '\n'
            << "vertex pst  " << vertex_text(rec.vertex) << '\n';
  return 0;
}

int cmd_spectrum(const std::string& bits) {
  const auto g = ThresholdGraph::parse(bits);
  std::cout << spectrum_text(spectrum(g)) << '\n';
  const auto mu = assign_eigenvalues(g);
  for (int l = 1; l <= g.order(); ++l) std::cout << "mu(" << l << ") = " << mu.at(l) << '\n';
  return 0;
}

int cmd_eigenbasis(const std::string& bits, bool ss) {
  const auto g = ThresholdGraph::parse(bits);
  if (ss) {
    const auto basis = ss_eigenbasis(g);
    for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
      std::cout << basis.eigenvalues[i] << ":";
      for (Int x : basis.vectors[i]) std::cout << ' ' << x;
      std::cout << '\n';
    }
    return 0;
  }
  const auto mu = assign_eigenvalues(g);
  for (int l = 1; l <= g.order(); ++l) {
    std::cout << mu.at(l) << ":";
    for (Int x : shared_eigenvector(g.order(), l)) std::cout << ' ' << x;
    std::cout << '\n';
  }
  return 0;
}

int cmd_whd(const std::string& bits, std::size_t budget, bool json, const std::string& csv) {
  const auto g = ThresholdGraph::parse(bits);
  const auto witness = whd_sufficient(g);
  const auto built = whd_construct(g, budget);
  if (json) {
    Json j{{"sequence", g.sequence()},
           {"sufficient", witness ? Json(witness->describe()) : Json(nullptr)},
           {"trace", built.trace}};
    j["status"] = built.certificate ? "yes" : (built.proven_absent ? "no" : "unknown");
    if (built.certificate) j["certificate"] = to_json(*built.certificate);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "sufficient  " << (witness ? witness->describe() : "not covered") << '\n';
    for (const auto& t : built.trace) std::cout << "trace       " << t << '\n';
    if (built.certificate) {
      std::cout << "certificate";
      for (const auto& p : built.certificate->provenance()) std::cout << " | " << p;
      std::cout << "\nW =\n";
      print_matrix(built.certificate->matrix());
      std::cout << "Lambda =";
      for (Int x : built.certificate->lambda()) std::cout << ' ' << x;
      std::cout << '\n';
    } else {
      std::cout << (built.proven_absent ? "not WHD" : "undecided") << '\n';
    }
  }
  if (!csv.empty() && built.certificate) {
    write_to(csv, [&](std::ostream& out) { write_matrix_csv(out, built.certificate->matrix()); });
  }
  return 0;
}

void print_pst(const PstResult& r, const PureState& u, const PureState& v) {
  std::cout << u.text() << " -> " << v.text() << ": ";
  switch (r.verdict) {
    case PstResult::Verdict::kPst:
      std::cout << "pst at " << format_pi(r.tau) << " (g = " << r.g << ", phase "
                << format_pi(r.phase) << ", fidelity " << r.fidelity << ")\n";
      break;
    case PstResult::Verdict::kNoPst:
      std::cout << "no pst: " << r.reason << '\n';
      break;
    case PstResult::Verdict::kFixed:
      std::cout << "fixed state\n";
      break;
  }
}

int cmd_pst(const std::string& bits, const std::string& pair, bool vertex, bool json) {
  const auto g = ThresholdGraph::parse(bits);
  const SpectralDecomposition d(g);
  Json j{{"sequence", g.sequence()}};
  if (!pair.empty()) {
    const auto [u, v] = parse_pair_states(pair);
    const auto r = pair_pst(d, u, v);
    if (json)
      j["pair"] = to_json(r, u, v);
    else
      print_pst(r, u, v);
  } else {
    const auto pairs = exact_pst_pairs(d);
    const bool closed = pair_conditions_hold(g);
    if (json) {
      j["block_conditions"] = closed;
      j["pairs"] = Json::array();
      for (const auto& p : pairs) j["pairs"].push_back(to_json(p.result, p.u, p.v));
    } else {
      std::cout << "block-form conditions " << (closed ? "hold" : "fail") << '\n';
      if (pairs.empty()) std::cout << "no pair state transfer\n";
      for (const auto& p : pairs) print_pst(p.result, p.u, p.v);
    }
  }
  if (vertex) {
    const auto vp = vertex_pst(d);
    if (json) {
      j["vertex"] = to_json(vp);
    } else if (vp.present) {
      std::cout << "vertex 1 -> 2 at " << format_pi(vp.tau) << " (fidelity " << vp.fidelity
                << ")\n";
      for (const auto& [b, f] : vp.periodicity)
        std::cout << "  vertex " << b << " returns with |<e_b|U|e_b>| = " << f << '\n';
    } else {
      std::cout << "no vertex state transfer: " << vp.reason << '\n';
    }
  }
  if (json) std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_walk(const std::string& bits, const std::string& time, const std::string& src,
             const std::string& dst) {
  const auto g = ThresholdGraph::parse(bits);
  const SpectralDecomposition d(g);
  const auto t = parse_pi(time);
  const auto u = parse_state(src), v = parse_state(dst);
  std::cout.precision(12);
  std::cout << "t = " << format_pi(t) << "  fidelity = " << fidelity(d, u, v, times_pi(t))
            << '\n';
  return 0;
}

int cmd_enumerate(int n_min, int n_max, const CatalogueOptions& options, const std::string& csv,
                  const std::string& json, bool check_spectra) {
  if (n_min < 2 || n_max < n_min || n_max > 30)
    throw Error(ErrorCode::kPrecondition, "need 2 <= n-min <= n-max <= 30");
  if (check_spectra) {
    for (int n = n_min; n <= std::min(n_max, kSpectrumCheckMaxOrder); ++n) {
      const auto clashes = spectrum_collisions(n);
      for (const auto& [a, b] : clashes) std::cerr << "same spectrum: " << a << " " << b << '\n';
      if (!clashes.empty())
        throw Error(ErrorCode::kVerifyFailed, "sequences of order " + std::to_string(n) +
                                                  " share a Laplacian spectrum");
    }
    std::cerr << "spectra pairwise distinct up to n = "
              << std::min(n_max, kSpectrumCheckMaxOrder) << '\n';
  }
  const auto c = catalogue(n_min, n_max, options);
  if (!csv.empty()) {
    write_to(csv, [&](std::ostream& out) { write_catalogue_csv(out, c.records); });
  }
  if (!json.empty()) {
    write_to(json, [&](std::ostream& out) { out << to_json(c).dump(1) << '\n'; });
  }
  print_summary(c, csv == "-" || json == "-" ? std::cerr : std::cout);
  return 0;
}

int cmd_table1(const std::string& path, const CatalogueOptions& base) {
  auto options = base;
  options.ss_only = true;
  const auto c = catalogue(2, 20, options);
  write_to(path, [&](std::ostream& out) { write_table1_csv(out, c.records); });
  print_summary(c, path == "-" ? std::cerr : std::cout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Threshold graph eigenbases, weak Hadamard diagonalizers and state transfer"};
  app.require_subcommand(1);

  std::string bits, pair, time, src, dst, csv, json_path, out_path;
  bool json = false, ss = false, vertex = false, check_spectra = false;
  std::size_t budget = kDefaultSearchBudget;
  int n_min = 2, n_max = 10;
  unsigned threads = 0;
  CatalogueOptions options;

  auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis of one graph");
  analyze_cmd->add_option("bits", bits, "binary creation sequence")->required();
  analyze_cmd->add_flag("--json", json, "JSON output");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Laplacian spectrum and mu(l)");
  spectrum_cmd->add_option("bits", bits)->required();

  auto* eigen_cmd = app.add_subcommand("eigenbasis", "Shared eigenbasis or {-1,0,1} eigenbasis");
  eigen_cmd->add_option("bits", bits)->required();
  eigen_cmd->add_flag("--ss", ss, "simply structured basis");

  auto* whd_cmd = app.add_subcommand("whd", "Weak Hadamard diagonalizer");
  whd_cmd->add_option("bits", bits)->required();
  whd_cmd->add_option("--search-budget", budget, "search node limit");
  whd_cmd->add_flag("--json", json);
  whd_cmd->add_option("--csv", csv, "write W as CSV");

  auto* pst_cmd = app.add_subcommand("pst", "Pair and vertex state transfer");
  pst_cmd->add_option("bits", bits)->required();
  pst_cmd->add_option("--pair", pair, "a,b,c,d for (e_a-e_b) -> (e_c-e_d)");
  pst_cmd->add_flag("--vertex", vertex, "vertex transfer 1 -> 2");
  pst_cmd->add_flag("--json", json);

  auto* walk_cmd = app.add_subcommand("walk", "Fidelity |<dst|U(t)|src>|");
  walk_cmd->add_option("bits", bits)->required();
  walk_cmd->add_option("--time", time, "time, e.g. 1/2pi or pi/2")->required();
  walk_cmd->add_option("--src", src, "vertex a or pair a,b")->required();
  walk_cmd->add_option("--dst", dst, "vertex a or pair a,b")->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "Catalogue of all graphs in a size range");
  enum_cmd->add_option("--n-min", n_min)->required();
  enum_cmd->add_option("--n-max", n_max)->required();
  enum_cmd->add_flag("--ss-only", options.ss_only);
  enum_cmd->add_option("--csv", csv);
  enum_cmd->add_option("--json", json_path);
  enum_cmd->add_option("--search-budget", budget);
  enum_cmd->add_option("--threads", threads, "worker threads (0 = all cores)");
  enum_cmd->add_flag("--check-spectra", check_spectra, "verify distinct spectra for n <= 10");

  auto* table_cmd = app.add_subcommand("table1", "Simply structured graphs up to 20 vertices");
  table_cmd->add_option("--out", out_path)->required();
  table_cmd->add_option("--search-budget", budget);
  table_cmd->add_option("--threads", threads);

  auto* dot_cmd = app.add_subcommand("dot", "Graphviz rendering");
  dot_cmd->add_option("bits", bits)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  options.whd_search_budget = budget;
  options.threads = threads;
  try {
    if (*analyze_cmd) return cmd_analyze(bits, json);
    if (*spectrum_cmd) return cmd_spectrum(bits);
    if (*eigen_cmd) return cmd_eigenbasis(bits, ss);
    if (*whd_cmd) return cmd_whd(bits, budget, json, csv);
    if (*pst_cmd) return cmd_pst(bits, pair, vertex, json);
    if (*walk_cmd) return cmd_walk(bits, time, src, dst);
    if (*enum_cmd) return cmd_enumerate(n_min, n_max, options, csv, json_path, check_spectra);
    if (*table_cmd) return cmd_table1(out_path, options);
    if (*dot_cmd) {
      std::cout << to_dot(ThresholdGraph::parse(bits));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_internal(e.code()) ? kExitInternal : kExitInput;
  }
  return kExitUsage;
}
