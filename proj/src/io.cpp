#include "threshold/io.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

#include "threshold/error.hpp"

namespace threshold {

std::string format_pi(const Rational& q) {
  if (q == 0) return "0";
  const auto num = q.get_num(), den = q.get_den();
  std::string out;
  if (num == -1)
    out = "-pi";
  else if (num == 1)
    out = "pi";
  else
    out = num.get_str() + "pi";
  if (den != 1) out += "/" + den.get_str();
  return out;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

Rational parse_rational(const std::string& s, std::string_view whole) {
  if (s.empty()) throw Error(ErrorCode::kParse, "empty number in '" + std::string(whole) + "'");
  Rational q;
  try {
    if (s.find('.') != std::string::npos) {
      // Decimal: digits after the point give the denominator.
      const auto dot = s.find('.');
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      mpz_class den = 1;
      for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
      q = Rational(mpz_class(digits), den);
    } else {
      q = Rational(s);
    }
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::kParse, "bad number in '" + std::string(whole) + "'");
  }
  if (q.get_den() == 0) throw Error(ErrorCode::kParse, "zero denominator in '" + std::string(whole) + "'");
  q.canonicalize();
  return q;
}

int parse_int(std::string_view s, std::string_view whole) {
  const auto t = trim(s);
  int v = 0;
  const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || p != t.data() + t.size() || t.empty())
    throw Error(ErrorCode::kParse, "bad integer '" + t + "' in '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Rational parse_pi(std::string_view text) {
  const auto s = trim(text);
  const auto at = s.find("pi");
  if (at == std::string::npos) return parse_rational(s, text);
  const std::string before = s.substr(0, at), after = s.substr(at + 2);
  Rational q = 1;
  if (!before.empty() && before != "-") {
    auto b = before;
    if (b.back() == '*') b.pop_back();
    q = parse_rational(b, text);
  } else if (before == "-") {
    q = -1;
  }
  if (!after.empty()) {
    if (after.front() != '/') throw Error(ErrorCode::kParse, "bad time '" + s + "'");
    const int den = parse_int(after.substr(1), text);
    if (den == 0) throw Error(ErrorCode::kParse, "zero denominator in '" + s + "'");
    q /= den;
  }
  q.canonicalize();
  return q;
}

std::pair<PureState, PureState> parse_pair_states(std::string_view text) {
  std::vector<int> v;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    v.push_back(parse_int(text.substr(start, end - start), text));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (v.size() != 4) throw Error(ErrorCode::kParse, "expected a,b,c,d in '" + std::string(text) + "'");
  try {
    return {PureState::pair(v[0], v[1]), PureState::pair(v[2], v[3])};
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

PureState parse_state(std::string_view text) {
  auto s = trim(text);
  if (!s.empty() && s.front() == 'e') s.erase(0, 1);
  const auto sep = s.find_first_of(",-");
  try {
    if (sep == std::string::npos) return PureState::vertex(parse_int(s, text));
    auto second = s.substr(sep + 1);
    if (!second.empty() && second.front() == 'e') second.erase(0, 1);
    return PureState::pair(parse_int(s.substr(0, sep), text), parse_int(second, text));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParse) throw;
    throw Error(ErrorCode::kParse, e.what());
  }
}

std::string spectrum_text(const Spectrum& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(s[i].value) + "^(" + std::to_string(s[i].multiplicity) + ")";
  }
  return out + "}";
}

Json to_json(const Spectrum& s) {
  Json j = Json::array();
  for (const auto& e : s) j.push_back({{"eigenvalue", e.value}, {"multiplicity", e.multiplicity}});
  return j;
}

Json to_json(const SsBasis& b) {
  Json cols = Json::array();
  for (std::size_t i = 0; i < b.vectors.size(); ++i)
    cols.push_back({{"eigenvalue", b.eigenvalues[i]}, {"vector", b.vectors[i]}});
  return cols;
}

Json to_json(const WhdCertificate& c) {
  return {{"columns", c.matrix().columns()}, {"lambda", c.lambda()}, {"provenance", c.provenance()}};
}

WhdCertificate certificate_from_json(const Json& j, const IntMatrix& lap) {
  try {
    const auto cols = j.at("columns").get<std::vector<IntVector>>();
    const auto lambda = j.at("lambda").get<std::vector<Int>>();
    auto cert = WhdCertificate::certify(IntMatrix::from_columns(cols), lap,
                                        j.value("provenance", std::vector<std::string>{}));
    if (cert.lambda() != lambda)
      throw Error(ErrorCode::kVerifyFailed, "stored Lambda differs from L W = W Lambda");
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  } catch (const std::out_of_range& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

namespace {

Json rational_json(const Rational& q) {
  return {{"num", q.get_num().get_si()}, {"den", q.get_den().get_si()}, {"times_pi", true}};
}

const char* verdict_text(PstResult::Verdict v) {
  switch (v) {
    case PstResult::Verdict::kPst:
      return "pst";
    case PstResult::Verdict::kNoPst:
      return "no-pst";
    case PstResult::Verdict::kFixed:
      return "fixed";
  }
  return "";
}

}  // namespace

Json to_json(const PstResult& r, const PureState& u, const PureState& v) {
  Json j{{"u", u.text()}, {"v", v.text()}, {"verdict", verdict_text(r.verdict)},
         {"reason", r.reason}};
  if (r.partition)
    j["support"] = {{"all", r.partition->support},
                    {"plus", r.partition->plus},
                    {"minus", r.partition->minus}};
  if (r.pst()) {
    j["tau"] = rational_json(r.tau);
    j["g"] = r.g;
    j["phase"] = rational_json(r.phase);
    j["fidelity"] = r.fidelity;
  }
  return j;
}

Json to_json(const VertexPst& v) {
  Json j{{"present", v.present}, {"reason", v.reason}};
  if (v.present) {
    j["src"] = 1;
    j["dst"] = 2;
    j["tau"] = rational_json(v.tau);
    j["fidelity"] = v.fidelity;
    Json periodic = Json::array();
    for (const auto& [b, f] : v.periodicity) periodic.push_back({{"vertex", b}, {"return", f}});
    j["periodic"] = periodic;
  }
  return j;
}

Json to_json(const CatalogueRecord& r) {
  Json j{{"n", r.n},
         {"sequence", r.sequence},
         {"expression", r.expression},
         {"ss", r.ss},
         {"whd", whd_text(r.whd)},
         {"whd_notes", r.whd_notes}};
  if (r.certificate) j["certificate"] = to_json(*r.certificate);
  Json pairs = Json::array();
  for (const auto& p : r.pst) pairs.push_back(to_json(p.result, p.u, p.v));
  j["pst"] = pairs;
  j["vertex_pst"] = r.vertex ? to_json(*r.vertex) : Json(nullptr);
  j["min_time"] = r.min_time ? Json(format_pi(*r.min_time)) : Json(nullptr);
  return j;
}

Json to_json(const Catalogue& c) {
  Json summary = Json::array();
  for (const auto& s : c.summary)
    summary.push_back({{"n", s.n},
                       {"graphs", s.graphs},
                       {"ss", s.ss},
                       {"whd_yes", s.whd_yes},
                       {"whd_unknown", s.whd_unknown},
                       {"whd_no", s.whd_no},
                       {"pst", s.pst},
                       {"vertex_pst", s.vertex_pst}});
  Json records = Json::array();
  for (const auto& r : c.records) records.push_back(to_json(r));
  return {{"summary", summary}, {"records", records}};
}

std::string pst_pairs_text(const std::vector<PairTransfer>& pairs) {
  std::string out;
  for (const auto& p : pairs) {
    if (!out.empty()) out += ';';
    out += "e" + std::to_string(p.u.a()) + "-e" + std::to_string(p.u.b()) + ">e" +
           std::to_string(p.v.a()) + "-e" + std::to_string(p.v.b()) + "@" +
           format_pi(p.result.tau);
  }
  return out;
}

std::string vertex_text(const std::optional<VertexPst>& v) {
  if (!v) return "n/a";
  if (!v->present) return "no";
  return "e1>e2@" + format_pi(v->tau);
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_matrix_csv(std::ostream& os, const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << '\n';
  }
}

void write_catalogue_csv(std::ostream& os, const std::vector<CatalogueRecord>& records) {
  os << "n,sequence,expression,ss,whd,pst_pairs,vertex_pst,min_time\n";
  for (const auto& r : records)
    os << r.n << ',' << r.sequence << ',' << csv_field(r.expression) << ','
       << (r.ss ? "yes" : "no") << ',' << whd_text(r.whd) << ',' << csv_field(pst_pairs_text(r.pst))
       << ',' << vertex_text(r.vertex) << ',' << (r.min_time ? format_pi(*r.min_time) : "")
       << '\n';
}

void write_table1_csv(std::ostream& os, const std::vector<CatalogueRecord>& records) {
  os << "n,b,expression,whd,pst\n";
  for (const auto& r : records) {
    std::string pst;
    const bool same_time = std::all_of(r.pst.begin(), r.pst.end(), [&](const PairTransfer& p) {
      return p.result.tau == r.pst.front().result.tau;
    });
    for (std::size_t i = 0; i < r.pst.size(); ++i) {
      pst += (i ? " " : "b=") + std::to_string(r.pst[i].b);
      if (!same_time) pst += "@" + format_pi(r.pst[i].result.tau);
    }
    if (!r.pst.empty() && same_time) pst += " @" + format_pi(r.pst.front().result.tau);
    os << r.n << ',' << r.sequence << ',' << csv_field(r.expression) << ',' << whd_text(r.whd)
       << ',' << csv_field(pst) << '\n';
  }
}

}  // namespace threshold
