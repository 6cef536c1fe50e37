#include "centspec/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "centspec/error.hpp"

namespace centspec {

namespace {

std::size_t rank_of(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) return 0;
  std::vector<std::vector<mpq_class>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

mpz_class dot(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += mpz_class(static_cast<long>(a[i])) * static_cast<long>(b[i]);
  return s;
}

bool is_eigenvector(const IntMatrix& m, const std::vector<std::int64_t>& v, std::int64_t lambda) {
  const auto mv = m.apply(v);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (mv[i] != lambda * v[i]) return false;
  return true;
}

bool block_invariant(const IntMatrix& m, const InvariantBlock& block) {
  const std::size_t d = block.basis.size();
  if (block.action.rows() != d || block.action.cols() != d) return false;
  for (std::size_t j = 0; j < d; ++j) {
    const auto image = m.apply(block.basis[j]);
    std::vector<std::int64_t> expected(image.size(), 0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t t = 0; t < expected.size(); ++t) expected[t] += block.action(i, j) * block.basis[i][t];
    if (image != expected) return false;
  }
  return true;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

bool trace_identities_hold(const ExactSpectrum& s, const Graph& g, MatrixKind kind) {
  const auto n = static_cast<std::int64_t>(g.order());
  if (s.dimension() != n) return false;
  mpz_class edges2 = 2 * mpz_class(static_cast<unsigned long>(g.edge_count()));
  mpz_class deg2 = 0;
  for (std::size_t v = 0; v < g.order(); ++v) deg2 += mpz_class(static_cast<unsigned long>(g.degree(v))) * g.degree(v);
  switch (kind) {
    case MatrixKind::Adjacency:
      return s.power_sum(1) == 0 && s.power_sum(2) == edges2;
    case MatrixKind::Laplacian:
    case MatrixKind::SignlessLaplacian:
      return s.power_sum(1) == edges2 && s.power_sum(2) == deg2 + edges2;
  }
  return false;
}

}  // namespace

EigenbasisCheck check_eigenbasis(const IntMatrix& m, const Eigenbasis& basis) {
  if (!m.is_square() || m.rows() != basis.dimension) throw DimensionMismatch("matrix and eigenbasis dimensions differ");
  auto check_len = [&](const std::vector<std::int64_t>& v) {
    if (v.size() != basis.dimension) throw DimensionMismatch("vector length differs from matrix dimension");
  };
  for (const auto& f : basis.families)
    for (const auto& v : f.vectors) check_len(v);
  if (basis.block)
    for (const auto& v : basis.block->basis) check_len(v);

  EigenbasisCheck out;
  out.dimension = basis.dimension;

  out.verified = true;
  for (const auto& f : basis.families)
    for (const auto& v : f.vectors)
      if (!is_eigenvector(m, v, f.eigenvalue)) out.verified = false;
  if (basis.block && !block_invariant(m, *basis.block)) out.verified = false;

  std::vector<const std::vector<std::vector<std::int64_t>>*> groups;
  for (const auto& f : basis.families) groups.push_back(&f.vectors);
  if (basis.block) groups.push_back(&basis.block->basis);

  out.orthogonal = true;
  for (std::size_t a = 0; a < groups.size() && out.orthogonal; ++a)
    for (std::size_t b = a + 1; b < groups.size() && out.orthogonal; ++b)
      for (const auto& u : *groups[a])
        for (const auto& v : *groups[b])
          if (dot(u, v) != 0) {
            out.orthogonal = false;
            break;
          }

  out.independent = true;
  for (const auto* g : groups)
    if (rank_of(*g) != g->size()) out.independent = false;

  std::size_t total = 0;
  out.count_ok = true;
  for (const auto& f : basis.families) {
    total += f.vectors.size();
    if (static_cast<std::int64_t>(f.vectors.size()) != f.claimed_multiplicity) out.count_ok = false;
  }
  if (basis.block) total += basis.block->basis.size();
  out.vector_count = total;
  if (total != basis.dimension) out.count_ok = false;
  return out;
}

EigenbasisCheck check_eigenbasis(const IntMatrix& m, const std::vector<EigenvectorFamily>& families) {
  return check_eigenbasis(m, Eigenbasis{m.rows(), families, std::nullopt});
}

Eigenbasis relabel(const Eigenbasis& basis, const std::vector<std::size_t>& positions) {
  if (positions.size() != basis.dimension) throw DimensionMismatch("relabelling has the wrong length");
  auto move = [&](const std::vector<std::int64_t>& v) {
    std::vector<std::int64_t> out(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) out[positions[i]] = v[i];
    return out;
  };
  Eigenbasis out = basis;
  for (auto& f : out.families)
    for (auto& v : f.vectors) v = move(v);
  if (out.block)
    for (auto& v : out.block->basis) v = move(v);
  return out;
}

bool ConsistencyChecks::all_hold() const {
  auto opt = [](const std::optional<bool>& b) { return !b || *b; };
  return relations_hold && trace_identities && complement_transfer && multipartite_charpoly &&
         quotient_consistent && opt(cubic_charpoly) && opt(quotient_display) && opt(laplacian_display_transfer);
}

const SpectrumCheck& VerificationReport::spectrum(GraphVariant variant, MatrixKind kind) const {
  for (const auto& s : spectra)
    if (s.variant == variant && s.kind == kind) return s;
  throw std::out_of_range("no spectrum entry for this variant and kind");
}

bool VerificationReport::all_match() const {
  if (!structure.match || spectra.size() != 6) return false;
  for (const auto& s : spectra)
    if (!s.match || !s.integrality_match) return false;
  for (const auto& e : eigenbasis)
    if (!e.check.ok()) return false;
  return checks.all_hold();
}

std::optional<std::string> degenerate_reason(const GroupSpec& spec) {
  spec.validate();
  const std::int64_t p0 = spec.params[0];
  switch (spec.family) {
    case Family::GeneralizedQuaternion:
      if (p0 == 2)
        return "n = 2: the cyclic centralizer of order 2n = 4 has the same cardinality as the n centralizers "
               "of the elements x^j y, so all three centralizers fall into one cardinality class";
      break;
    case Family::Dihedral:
      if (p0 == 4)
        return "n = 4: the rotation subgroup of order n = 4 has the same cardinality as the n/2 reflection "
               "centralizers, so all three centralizers fall into one cardinality class";
      break;
    case Family::Metacyclic:
      if (p0 == 4)
        return "p = 4: the centralizer of a has order pq = 4q, the same as the p/2 centralizers of the "
               "elements a^i b^j with j odd, so the two claimed classes merge";
      break;
    case Family::ProjectiveSpecialLinear:
      if (p0 == 1)
        return "k = 1: PSL(2,2) is S3; the split-torus centralizers have order 2^k - 1 = 1 and are not proper "
               "centralizers of non-central elements, so fewer centralizers exist than the three-clique formula implies";
      break;
    case Family::Quasidihedral:
      break;
  }
  return std::nullopt;
}

VerificationReport verify_instance(const GroupSpec& spec, const VerifyOptions& options) {
  spec.validate();
  VerificationReport report;
  report.spec = spec;
  report.group_order = expected_order(spec);
  if (report.group_order > options.budget)
    throw BudgetExceeded(spec.to_string() + " has order " + std::to_string(report.group_order) +
                         ", above the budget of " + std::to_string(options.budget));

  const FiniteGroup group = build_group(spec, options.budget);
  report.checks.relations_hold =
      defining_relations_hold(group) && has_identity_and_inverses(group) && is_associative(group);

  const auto proper = proper_centralizers(group);
  const Graph cent = centralizer_graph(proper);
  const Graph co = cent.complement();
  const auto n = static_cast<std::int64_t>(cent.order());

  report.structure.computed = clique_decomposition(cent);
  report.structure.claimed = claimed_structure(spec, GraphVariant::Centralizer);
  report.structure.match = report.structure.computed == report.structure.claimed;
  report.structure.centralizer_count = proper.size();
  report.structure.implied_count = static_cast<std::size_t>(report.structure.claimed.total());
  if (report.structure.centralizer_count != report.structure.implied_count)
    report.notes.push_back("computed " + std::to_string(report.structure.centralizer_count) +
                           " proper centralizers; the claimed structure implies " +
                           std::to_string(report.structure.implied_count));

  IntPolynomial co_adj_cp, co_q_cp;
  report.checks.trace_identities = true;
  for (GraphVariant variant : {GraphVariant::Centralizer, GraphVariant::CoCentralizer}) {
    const Graph& graph = variant == GraphVariant::Centralizer ? cent : co;
    for (MatrixKind kind : kAllKinds) {
      SpectrumCheck entry;
      entry.variant = variant;
      entry.kind = kind;
      const IntPolynomial cp = char_poly(matrix_of(graph, kind));
      if (variant == GraphVariant::CoCentralizer && kind == MatrixKind::Adjacency) co_adj_cp = cp;
      if (variant == GraphVariant::CoCentralizer && kind == MatrixKind::SignlessLaplacian) co_q_cp = cp;
      entry.oracle = extract_spectrum(cp).normalized();
      entry.closed_form = family_spectrum(spec, variant, kind).normalized();
      entry.match = entry.oracle == entry.closed_form;
      entry.claim = integrality_claim(spec, variant, kind);
      entry.computed_integral = entry.oracle.is_integral();
      entry.integrality_match = entry.claim.holds == entry.computed_integral;
      if (!trace_identities_hold(entry.oracle, graph, kind)) report.checks.trace_identities = false;
      report.spectra.push_back(std::move(entry));
    }
  }

  const auto& cent_l = report.spectrum(GraphVariant::Centralizer, MatrixKind::Laplacian).oracle;
  const auto& co_l = report.spectrum(GraphVariant::CoCentralizer, MatrixKind::Laplacian).oracle;
  report.checks.complement_transfer = complement_L_spectrum(cent_l, n) == co_l;
  report.checks.multipartite_charpoly = multipartite_adj_charpoly(report.structure.computed) == co_adj_cp;

  const auto cells = components(cent);
  std::vector<std::int64_t> cell_sizes;
  for (const auto& c : cells) cell_sizes.push_back(static_cast<std::int64_t>(c.size()));
  const IntMatrix co_q = matrix_of(co, MatrixKind::SignlessLaplacian);
  const auto quotient = equitable_quotient(co_q, cells);
  report.checks.quotient_consistent =
      quotient && *quotient == quotient_matrix(cell_sizes, MatrixKind::SignlessLaplacian, PartitionVariant::Multipartite) &&
      co_q_cp.divmod_monic(char_poly(*quotient)).second.is_zero();

  if (spec.family == Family::ProjectiveSpecialLinear) {
    const std::int64_t k = spec.params[0];
    const auto sizes = psl_block_sizes(k);
    const IntMatrix display = psl_cocentralizer_quotient(k);

    report.checks.cubic_charpoly = co_adj_cp == psl_cocentralizer_adjacency_charpoly(k);
    bool display_ok =
        quotient_matrix(sizes, MatrixKind::SignlessLaplacian, PartitionVariant::Multipartite) == display;

    // positions[i] = computed vertex of block-labelled vertex i
    std::vector<std::size_t> positions;
    if (report.structure.match) {
      std::vector<bool> used(cells.size(), false);
      std::vector<std::vector<std::size_t>> ordered;
      for (std::int64_t size : sizes) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
          if (!used[c] && static_cast<std::int64_t>(cells[c].size()) == size) {
            used[c] = true;
            ordered.push_back(cells[c]);
            positions.insert(positions.end(), cells[c].begin(), cells[c].end());
            break;
          }
        }
      }
      const auto ordered_quotient = equitable_quotient(co_q, ordered);
      display_ok = display_ok && ordered.size() == 3 && ordered_quotient && *ordered_quotient == display;
    }
    report.checks.quotient_display = display_ok;

    const ExactSpectrum closed_co_l = family_spectrum(spec, GraphVariant::CoCentralizer, MatrixKind::Laplacian);
    const ExactSpectrum closed_cent_l = family_spectrum(spec, GraphVariant::Centralizer, MatrixKind::Laplacian);
    const std::int64_t claimed_n = sizes[0] + sizes[1] + sizes[2];
    report.checks.laplacian_display_transfer =
        complement_L_spectrum(cent_l, n) == closed_co_l && complement_L_spectrum(closed_cent_l, claimed_n) == closed_co_l;

    const ExactSpectrum lp = extract_spectrum(char_poly(display));
    report.checks.quotient_integral = lp.is_integral();
    report.notes.push_back("quotient matrix spectrum at k = " + std::to_string(k) + ": " + lp.to_string() +
                           (lp.is_integral() ? " (integral)" : " (not integral)"));

    for (GraphVariant variant : {GraphVariant::Centralizer, GraphVariant::CoCentralizer}) {
      EigenbasisEntry entry;
      entry.variant = variant;
      const Eigenbasis basis = psl_eigenbasis(k, variant);
      if (report.structure.match) {
        const Graph& graph = variant == GraphVariant::Centralizer ? cent : co;
        entry.check = check_eigenbasis(matrix_of(graph, MatrixKind::SignlessLaplacian), relabel(basis, positions));
      } else {
        Graph model = clique_union_graph(sizes);
        if (variant == GraphVariant::CoCentralizer) model = model.complement();
        entry.check = check_eigenbasis(matrix_of(model, MatrixKind::SignlessLaplacian), basis);
        entry.on_claimed_structure = true;
      }
      report.eigenbasis.push_back(entry);
    }
    if (!report.structure.match)
      report.notes.push_back("eigenvectors checked on the graph built from the claimed structure " +
                             report.structure.claimed.to_string());
  }

  if (auto reason = degenerate_reason(spec)) {
    report.degenerate = true;
    std::vector<std::string> parts{*reason};
    parts.push_back("computed centralizer graph " + report.structure.computed.to_string() + " on " +
                    std::to_string(report.structure.centralizer_count) + " vertices; claimed " +
                    report.structure.claimed.to_string() + " on " + std::to_string(report.structure.implied_count) +
                    " vertices");
    std::vector<std::string> failed;
    for (const auto& s : report.spectra)
      if (!s.match) failed.push_back(std::string(variant_name(s.variant)) + "/" + std::string(kind_name(s.kind)));
    if (!failed.empty()) parts.push_back("closed forms differ for " + join(failed, ", "));
    report.degenerate_reason = join(parts, "; ");
  }
  return report;
}

std::vector<SweepEntry> sweep(const std::vector<GroupSpec>& specs, const VerifyOptions& options) {
  std::vector<SweepEntry> out(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      out[i].spec = specs[i];
      try {
        out[i].report = verify_instance(specs[i], options);
      } catch (const BudgetExceeded& e) {
        out[i].error = e.what();
        out[i].error_code = 3;
      } catch (const InvalidParams& e) {
        out[i].error = e.what();
        out[i].error_code = 2;
      } catch (const std::exception& e) {
        out[i].error = e.what();
        out[i].error_code = 1;
      }
    }
  };
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, specs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

std::vector<GroupSpec> expand_specs(Family family, const std::vector<std::pair<std::int64_t, std::int64_t>>& ranges) {
  for (const auto& [lo, hi] : ranges)
    if (lo > hi) throw InvalidParams("empty range " + std::to_string(lo) + ".." + std::to_string(hi));
  std::vector<GroupSpec> out;
  std::vector<std::int64_t> current;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == ranges.size()) {
      out.push_back({family, current});
      return;
    }
    for (std::int64_t v = ranges[i].first; v <= ranges[i].second; ++v) {
      current.push_back(v);
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

bool same_outcome(const VerificationReport& a, const VerificationReport& b) {
  if (!(a.structure == b.structure) || a.spectra.size() != b.spectra.size() || a.degenerate != b.degenerate)
    return false;
  for (std::size_t i = 0; i < a.spectra.size(); ++i) {
    const auto& x = a.spectra[i];
    const auto& y = b.spectra[i];
    if (x.variant != y.variant || x.kind != y.kind || !(x.oracle == y.oracle) || !(x.closed_form == y.closed_form) ||
        x.match != y.match || x.computed_integral != y.computed_integral)
      return false;
  }
  return true;
}

}  // namespace centspec
