#pragma once

// Text, JSON and CSV renderings of analysis results.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "threshold/catalogue.hpp"
#include "threshold/simply_structured.hpp"
#include "threshold/spectral.hpp"

namespace threshold {

using Json = nlohmann::ordered_json;

/// q * pi as text: "0", "pi", "pi/2", "3pi/4", "2pi".
std::string format_pi(const Rational& q);

/// Parses "<p>/<q>pi", "<p>pi/<q>", "pi/<q>", "<p>pi", "pi" or a bare rational
/// (already in units of pi). Throws E_PARSE.
Rational parse_pi(std::string_view text);

/// Parses "a,b,c,d" into two pair states. Throws E_PARSE.
std::pair<PureState, PureState> parse_pair_states(std::string_view text);

/// "e3", "3", "1,3" or "1-3": a vertex or pair state. Throws E_PARSE.
PureState parse_state(std::string_view text);

std::string spectrum_text(const Spectrum& s);

Json to_json(const Spectrum& s);
Json to_json(const SsBasis& b);
Json to_json(const WhdCertificate& c);
Json to_json(const PstResult& r, const PureState& u, const PureState& v);
Json to_json(const VertexPst& v);
Json to_json(const CatalogueRecord& r);
Json to_json(const Catalogue& c);

/// Rebuilds a certificate from its JSON form and re-verifies it against `lap`.
WhdCertificate certificate_from_json(const Json& j, const IntMatrix& lap);

/// "e1-e3>e2-e3@pi/2;..." or empty.
std::string pst_pairs_text(const std::vector<PairTransfer>& pairs);
/// "e1>e2@pi/2", "no" or "n/a".
std::string vertex_text(const std::optional<VertexPst>& v);

std::string csv_field(std::string_view s);
void write_matrix_csv(std::ostream& os, const IntMatrix& m);
/// Columns n,sequence,expression,ss,whd,pst_pairs,vertex_pst,min_time.
void write_catalogue_csv(std::ostream& os, const std::vector<CatalogueRecord>& records);
/// Columns n,b,expression,whd,pst (blank pst when no pair transfer).
void write_table1_csv(std::ostream& os, const std::vector<CatalogueRecord>& records);

}  // namespace threshold
