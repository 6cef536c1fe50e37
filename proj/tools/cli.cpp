#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "centspec/document.hpp"
#include "centspec/error.hpp"

namespace centspec::cli {

namespace {

using Range = std::pair<std::int64_t, std::int64_t>;

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw InvalidParams("not an integer: '" + std::string(s) + "'");
  return v;
}

Range parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_int(s);
    return {v, v};
  }
  const Range r{parse_int(std::string_view(s).substr(0, dots)), parse_int(std::string_view(s).substr(dots + 2))};
  if (r.first > r.second) throw InvalidParams("empty range '" + s + "'");
  return r;
}

struct Options {
  std::string family;
  std::string n, p, q, k;
  std::string variant = "centralizer";
  std::string kind = "adjacency";
  std::string source = "oracle";
  std::string format = "json";
  std::optional<std::uint64_t> budget;
  unsigned threads = 0;
  bool approx = false;
};

std::vector<Range> family_ranges(const Options& o, Family family) {
  auto need = [&](const std::string& value, const char* flag) {
    if (value.empty())
      throw InvalidParams(std::string(family_name(family)) + " requires --" + flag);
    return parse_range(value);
  };
  switch (family) {
    case Family::GeneralizedQuaternion:
    case Family::Dihedral:
    case Family::Quasidihedral:
      return {need(o.n, "n")};
    case Family::Metacyclic:
      return {need(o.p, "p"), need(o.q, "q")};
    case Family::ProjectiveSpecialLinear:
      return {need(o.k, "k")};
  }
  return {};
}

std::vector<GroupSpec> specs_of(const Options& o) {
  if (o.family.empty()) throw InvalidParams("--family is required");
  const Family family = parse_family(o.family);
  auto specs = expand_specs(family, family_ranges(o, family));
  for (const auto& s : specs) s.validate();
  return specs;
}

GroupSpec single_spec(const Options& o) {
  const auto specs = specs_of(o);
  if (specs.size() != 1) throw InvalidParams("this command takes a single parameter value, not a range");
  return specs.front();
}

std::uint64_t budget_of(const Options& o) {
  if (o.budget) return *o.budget;
  if (const char* env = std::getenv("SPECTRA_BUDGET"); env && *env) {
    const auto v = parse_int(env);
    if (v <= 0) throw InvalidParams("SPECTRA_BUDGET must be positive");
    return static_cast<std::uint64_t>(v);
  }
  return kDefaultOrderBudget;
}

void emit(std::ostream& out, const std::vector<std::string>& args, Json payload) {
  OutputDocument doc;
  doc.command = args;
  doc.payload = std::move(payload);
  out << to_json(doc).dump(2) << '\n';
}

void require_json(const Options& o) {
  if (o.format != "json") throw InvalidParams("--format csv is available for verify only");
}

int cmd_structure(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  require_json(o);
  const GroupSpec spec = single_spec(o);
  const GraphVariant variant = parse_variant(o.variant);
  const FiniteGroup group = build_group(spec, budget_of(o));
  const auto proper = proper_centralizers(group);
  Graph graph = centralizer_graph(proper);
  if (variant == GraphVariant::CoCentralizer) graph = graph.complement();
  const CliqueDecomposition computed =
      variant == GraphVariant::Centralizer ? clique_decomposition(graph) : multipartite_decomposition(graph);
  const CliqueDecomposition claimed = claimed_structure(spec, variant);

  Json payload;
  payload["spec"] = to_json(spec);
  payload["variant"] = std::string(variant_name(variant));
  payload["reading"] = variant == GraphVariant::Centralizer ? "disjoint union of cliques" : "complete multipartite";
  payload["group_order"] = group.order();
  payload["vertices"] = graph.order();
  payload["edges"] = graph.edge_count();
  payload["parts"] = to_json(computed);
  payload["claimed"] = to_json(claimed);
  payload["match"] = computed == claimed;
  const auto reason = degenerate_reason(spec);
  payload["degenerate"] = reason.has_value();
  payload["degenerate_reason"] = reason.value_or("");
  emit(out, args, std::move(payload));
  return kOk;
}

int cmd_spectrum(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  require_json(o);
  const GroupSpec spec = single_spec(o);
  const GraphVariant variant = parse_variant(o.variant);
  const MatrixKind kind = parse_kind(o.kind);
  Json payload;
  payload["spec"] = to_json(spec);
  payload["variant"] = std::string(variant_name(variant));
  payload["kind"] = std::string(kind_name(kind));
  ExactSpectrum spectrum;
  if (o.source == "oracle") {
    const FiniteGroup group = build_group(spec, budget_of(o));
    Graph graph = centralizer_graph(group);
    if (variant == GraphVariant::CoCentralizer) graph = graph.complement();
    const IntPolynomial cp = char_poly(matrix_of(graph, kind));
    payload["source"] = "oracle";
    payload["characteristic_polynomial"] = to_json(cp);
    spectrum = extract_spectrum(cp).normalized();
  } else if (o.source == "closed-form" || o.source == "closed_form") {
    payload["source"] = "closed-form";
    spectrum = family_spectrum(spec, variant, kind);
  } else {
    throw InvalidParams("--source must be oracle or closed-form");
  }
  payload["spectrum"] = to_json(spectrum, o.approx);
  payload["text"] = spectrum.to_string();
  emit(out, args, std::move(payload));
  return kOk;
}

int cmd_verify(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  if (o.format != "json" && o.format != "csv") throw InvalidParams("--format must be json or csv");
  const auto specs = specs_of(o);
  const auto entries = sweep(specs, {budget_of(o), o.threads});

  bool mismatch = false;
  int error_code = kOk;
  Json degenerate = Json::array(), mismatches = Json::array(), errors = Json::array(), notes = Json::array();
  for (const auto& e : entries) {
    if (!e.report) {
      if (error_code == kOk) error_code = e.error_code;
      errors.push_back({{"spec", e.spec.to_string()}, {"error", e.error}, {"code", e.error_code}});
      continue;
    }
    if (e.report->degenerate) degenerate.push_back({{"spec", e.spec.to_string()}, {"reason", e.report->degenerate_reason}});
    if (e.report->genuine_mismatch()) {
      mismatch = true;
      mismatches.push_back(e.spec.to_string());
    }
  }

  std::optional<bool> q_independent;
  if (!specs.empty() && specs.front().family == Family::Metacyclic) {
    std::map<std::int64_t, std::vector<const VerificationReport*>> by_p;
    for (const auto& e : entries)
      if (e.report) by_p[e.spec.params[0]].push_back(&*e.report);
    for (const auto& [p, reports] : by_p) {
      if (reports.size() < 2) continue;
      bool same = true;
      for (const auto* r : reports) same = same && same_outcome(*reports.front(), *r);
      q_independent = q_independent.value_or(true) && same;
      notes.push_back("p = " + std::to_string(p) + ": reports " + (same ? "identical" : "differ") + " across " +
                      std::to_string(reports.size()) + " values of q");
      if (!same) {
        mismatch = true;
        mismatches.push_back("metacyclic(p=" + std::to_string(p) + ") varies with q");
      }
    }
  }

  if (o.format == "csv") {
    out << to_csv(entries);
  } else {
    Json payload;
    payload["mode"] = specs.size() == 1 ? "instance" : "sweep";
    Json list = Json::array();
    for (const auto& e : entries) list.push_back(to_json(e, o.approx));
    payload["entries"] = std::move(list);
    payload["degenerate"] = std::move(degenerate);
    payload["mismatches"] = std::move(mismatches);
    payload["errors"] = std::move(errors);
    if (q_independent) payload["q_independent"] = *q_independent;
    payload["notes"] = std::move(notes);
    emit(out, args, std::move(payload));
  }
  if (mismatch) return kMismatch;
  return error_code;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family, "quaternion | dihedral | quasidihedral | metacyclic | psl")->required();
  cmd->add_option("--n", o.n, "n for quaternion, dihedral, quasidihedral (a or a..b)");
  cmd->add_option("--p", o.p, "p for metacyclic");
  cmd->add_option("--q", o.q, "q for metacyclic");
  cmd->add_option("--k", o.k, "k for psl (field of order 2^k)");
  cmd->add_option("--budget", o.budget, "maximum group order (default 100000, or SPECTRA_BUDGET)");
  cmd->add_option("--format", o.format, "json | csv");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Centralizer and co-centralizer graph spectra of finite groups", "centspec"};
  app.require_subcommand(1);
  Options o;

  auto* structure = app.add_subcommand("structure", "computed and claimed clique structure");
  add_common(structure, o);
  structure->add_option("--variant", o.variant, "centralizer | cocentralizer");

  auto* spectrum = app.add_subcommand("spectrum", "exact spectrum of one graph matrix");
  add_common(spectrum, o);
  spectrum->add_option("--variant", o.variant, "centralizer | cocentralizer");
  spectrum->add_option("--kind", o.kind, "adjacency | laplacian | signless");
  spectrum->add_option("--source", o.source, "oracle | closed-form");
  spectrum->add_flag("--approx", o.approx, "add floating-point root approximations");

  auto* verify = app.add_subcommand("verify", "check every closed form against the exact computation");
  add_common(verify, o);
  verify->add_flag("--approx", o.approx, "add floating-point root approximations");
  verify->add_option("--threads", o.threads, "worker threads for sweeps (0 = all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }

  try {
    if (structure->parsed()) return cmd_structure(o, args, out);
    if (spectrum->parsed()) return cmd_spectrum(o, args, out);
    return cmd_verify(o, args, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const InvalidParams& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kInvalid;
  } catch (const AbelianGroup& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kMismatch;
  }
}

}  // namespace centspec::cli
