#include "centspec/document.hpp"

#include <sstream>

#include "centspec/error.hpp"

namespace centspec {

namespace {

mpz_class parse_integer(const Json& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>());
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<std::int64_t>()));
  throw InvalidParams("expected an integer or a decimal string");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }
std::optional<bool> optional_bool(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<bool>();
}

}  // namespace

Json to_json(const OutputDocument& doc) {
  Json j;
  j["schema_version"] = doc.schema_version;
  j["command"] = doc.command;
  j["payload"] = doc.payload;
  return j;
}

OutputDocument document_from_json(const Json& j) {
  OutputDocument doc;
  doc.schema_version = j.at("schema_version").get<int>();
  doc.command = j.at("command").get<std::vector<std::string>>();
  doc.payload = j.at("payload");
  return doc;
}

Json to_json(const IntPolynomial& p) {
  Json j = Json::array();
  for (const auto& c : p.coefficients()) j.push_back(c.get_str());
  return j;
}

IntPolynomial polynomial_from_json(const Json& j) {
  std::vector<mpz_class> coeffs;
  for (const auto& c : j) coeffs.push_back(parse_integer(c));
  return IntPolynomial(std::move(coeffs));
}

Json to_json(const ExactSpectrum& s, bool approx) {
  Json j;
  Json eig = Json::array();
  for (const auto& [value, mult] : s.eigenvalues()) eig.push_back({{"value", value.get_str()}, {"multiplicity", mult}});
  j["eigenvalues"] = std::move(eig);
  Json res = Json::array();
  for (const auto& r : s.residuals()) {
    Json entry;
    entry["coefficients"] = to_json(r.factor);
    entry["multiplicity"] = r.multiplicity;
    entry["text"] = r.factor.to_string();
    if (approx) entry["approximate_roots"] = approx_roots(r.factor);
    res.push_back(std::move(entry));
  }
  j["residuals"] = std::move(res);
  j["dimension"] = s.dimension();
  j["integral"] = s.is_integral();
  if (approx) j["approximate"] = "approximate_roots are floating-point display values, not used for verification";
  return j;
}

ExactSpectrum spectrum_from_json(const Json& j) {
  ExactSpectrum s;
  for (const auto& e : j.at("eigenvalues"))
    s.add_eigenvalue(parse_integer(e.at("value")), e.at("multiplicity").get<std::int64_t>());
  for (const auto& r : j.at("residuals"))
    s.add_residual(polynomial_from_json(r.at("coefficients")), r.at("multiplicity").get<unsigned>());
  return s;
}

Json to_json(const CliqueDecomposition& d) { return d.parts(); }

CliqueDecomposition decomposition_from_json(const Json& j) {
  return CliqueDecomposition(j.get<std::vector<std::int64_t>>());
}

Json to_json(const GroupSpec& spec) {
  return {{"family", std::string(family_name(spec.family))}, {"params", spec.params}, {"name", spec.to_string()}};
}

GroupSpec spec_from_json(const Json& j) {
  return {parse_family(j.at("family").get<std::string>()), j.at("params").get<std::vector<std::int64_t>>()};
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j) {
  const auto rows = j.get<std::vector<std::vector<std::int64_t>>>();
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw DimensionMismatch("ragged matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = rows[i][c];
  }
  return m;
}

Json to_json(const VerificationReport& r, bool approx) {
  Json j;
  j["spec"] = to_json(r.spec);
  j["group_order"] = r.group_order;
  j["structure"] = {{"computed", to_json(r.structure.computed)},
                    {"claimed", to_json(r.structure.claimed)},
                    {"match", r.structure.match},
                    {"centralizer_count", r.structure.centralizer_count},
                    {"implied_count", r.structure.implied_count}};
  Json spectra = Json::array();
  for (const auto& s : r.spectra) {
    Json e;
    e["variant"] = std::string(variant_name(s.variant));
    e["kind"] = std::string(kind_name(s.kind));
    e["oracle"] = to_json(s.oracle, approx);
    e["closed_form"] = to_json(s.closed_form, approx);
    e["match"] = s.match;
    e["integrality"] = {{"claim", std::string(claim_kind_name(s.claim.kind))},
                        {"condition", s.claim.condition},
                        {"claimed", s.claim.holds},
                        {"computed", s.computed_integral},
                        {"match", s.integrality_match}};
    spectra.push_back(std::move(e));
  }
  j["spectra"] = std::move(spectra);
  Json eig = Json::array();
  for (const auto& e : r.eigenbasis) {
    eig.push_back({{"variant", std::string(variant_name(e.variant))},
                   {"verified", e.check.verified},
                   {"orthogonal", e.check.orthogonal},
                   {"independent", e.check.independent},
                   {"count_ok", e.check.count_ok},
                   {"vector_count", e.check.vector_count},
                   {"dimension", e.check.dimension},
                   {"on_claimed_structure", e.on_claimed_structure}});
  }
  j["eigenbasis"] = std::move(eig);
  const auto& c = r.checks;
  j["checks"] = {{"relations_hold", c.relations_hold},
                 {"trace_identities", c.trace_identities},
                 {"complement_transfer", c.complement_transfer},
                 {"multipartite_charpoly", c.multipartite_charpoly},
                 {"quotient_consistent", c.quotient_consistent},
                 {"cubic_charpoly", optional_bool(c.cubic_charpoly)},
                 {"quotient_display", optional_bool(c.quotient_display)},
                 {"laplacian_display_transfer", optional_bool(c.laplacian_display_transfer)},
                 {"quotient_integral", optional_bool(c.quotient_integral)}};
  j["degenerate"] = r.degenerate;
  j["degenerate_reason"] = r.degenerate_reason;
  j["all_match"] = r.all_match();
  j["notes"] = r.notes;
  return j;
}

VerificationReport report_from_json(const Json& j) {
  VerificationReport r;
  r.spec = spec_from_json(j.at("spec"));
  r.group_order = j.at("group_order").get<std::uint64_t>();
  const auto& st = j.at("structure");
  r.structure.computed = decomposition_from_json(st.at("computed"));
  r.structure.claimed = decomposition_from_json(st.at("claimed"));
  r.structure.match = st.at("match").get<bool>();
  r.structure.centralizer_count = st.at("centralizer_count").get<std::size_t>();
  r.structure.implied_count = st.at("implied_count").get<std::size_t>();
  for (const auto& e : j.at("spectra")) {
    SpectrumCheck s;
    s.variant = parse_variant(e.at("variant").get<std::string>());
    s.kind = parse_kind(e.at("kind").get<std::string>());
    s.oracle = spectrum_from_json(e.at("oracle"));
    s.closed_form = spectrum_from_json(e.at("closed_form"));
    s.match = e.at("match").get<bool>();
    const auto& in = e.at("integrality");
    const auto claim = in.at("claim").get<std::string>();
    s.claim.kind = claim == "always" ? ClaimKind::Always : claim == "never" ? ClaimKind::Never : ClaimKind::Condition;
    s.claim.condition = in.at("condition").get<std::string>();
    s.claim.holds = in.at("claimed").get<bool>();
    s.computed_integral = in.at("computed").get<bool>();
    s.integrality_match = in.at("match").get<bool>();
    r.spectra.push_back(std::move(s));
  }
  for (const auto& e : j.at("eigenbasis")) {
    EigenbasisEntry entry;
    entry.variant = parse_variant(e.at("variant").get<std::string>());
    entry.check.verified = e.at("verified").get<bool>();
    entry.check.orthogonal = e.at("orthogonal").get<bool>();
    entry.check.independent = e.at("independent").get<bool>();
    entry.check.count_ok = e.at("count_ok").get<bool>();
    entry.check.vector_count = e.at("vector_count").get<std::size_t>();
    entry.check.dimension = e.at("dimension").get<std::size_t>();
    entry.on_claimed_structure = e.at("on_claimed_structure").get<bool>();
    r.eigenbasis.push_back(entry);
  }
  const auto& c = j.at("checks");
  r.checks.relations_hold = c.at("relations_hold").get<bool>();
  r.checks.trace_identities = c.at("trace_identities").get<bool>();
  r.checks.complement_transfer = c.at("complement_transfer").get<bool>();
  r.checks.multipartite_charpoly = c.at("multipartite_charpoly").get<bool>();
  r.checks.quotient_consistent = c.at("quotient_consistent").get<bool>();
  r.checks.cubic_charpoly = optional_bool(c.at("cubic_charpoly"));
  r.checks.quotient_display = optional_bool(c.at("quotient_display"));
  r.checks.laplacian_display_transfer = optional_bool(c.at("laplacian_display_transfer"));
  r.checks.quotient_integral = optional_bool(c.at("quotient_integral"));
  r.degenerate = j.at("degenerate").get<bool>();
  r.degenerate_reason = j.at("degenerate_reason").get<std::string>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

Json to_json(const SweepEntry& e, bool approx) {
  Json j;
  j["spec"] = to_json(e.spec);
  if (e.report) j["report"] = to_json(*e.report, approx);
  else j["report"] = nullptr;
  j["error"] = e.error;
  j["error_code"] = e.error_code;
  return j;
}

SweepEntry sweep_entry_from_json(const Json& j) {
  SweepEntry e;
  e.spec = spec_from_json(j.at("spec"));
  if (!j.at("report").is_null()) e.report = report_from_json(j.at("report"));
  e.error = j.at("error").get<std::string>();
  e.error_code = j.at("error_code").get<int>();
  return e;
}

std::vector<std::string> csv_columns() {
  return {"family",         "params",          "variant",    "kind",       "oracle",
          "closed_form",    "match",           "claim",      "claimed_integral", "computed_integral",
          "integrality_match", "structure_computed", "structure_claimed", "structure_match", "degenerate",
          "error"};
}

std::string to_csv(const std::vector<SweepEntry>& entries) {
  std::ostringstream out;
  const auto cols = csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  auto params_of = [](const GroupSpec& s) {
    std::string p;
    for (std::size_t i = 0; i < s.params.size(); ++i) p += (i ? ";" : "") + std::to_string(s.params[i]);
    return p;
  };
  for (const auto& e : entries) {
    const std::string family(family_name(e.spec.family));
    if (!e.report) {
      std::vector<std::string> row(cols.size());
      row[0] = family;
      row[1] = params_of(e.spec);
      row.back() = e.error;
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
      out << '\n';
      continue;
    }
    const auto& r = *e.report;
    for (const auto& s : r.spectra) {
      const std::vector<std::string> row{family,
                                         params_of(e.spec),
                                         std::string(variant_name(s.variant)),
                                         std::string(kind_name(s.kind)),
                                         s.oracle.to_string(),
                                         s.closed_form.to_string(),
                                         bool_str(s.match),
                                         std::string(claim_kind_name(s.claim.kind)),
                                         bool_str(s.claim.holds),
                                         bool_str(s.computed_integral),
                                         bool_str(s.integrality_match),
                                         r.structure.computed.to_string(),
                                         r.structure.claimed.to_string(),
                                         bool_str(r.structure.match),
                                         bool_str(r.degenerate),
                                         ""};
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace centspec
