#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "centspec/closed_forms.hpp"
#include "centspec/graph.hpp"
#include "centspec/group.hpp"
#include "centspec/spectra.hpp"

namespace centspec {

struct EigenbasisCheck {
  bool verified = false;     // M v = lambda v for every vector, and the block is invariant
  bool orthogonal = false;   // vectors from different families are orthogonal
  bool independent = false;  // each family (and the block basis) has full rank
  bool count_ok = false;     // family sizes match the claimed multiplicities and sum to the dimension
  std::size_t vector_count = 0;
  std::size_t dimension = 0;

  bool ok() const { return verified && orthogonal && independent && count_ok; }
  bool operator==(const EigenbasisCheck&) const = default;
};

/// Exact integer check of explicit eigenvectors against `m`. Throws DimensionMismatch.
EigenbasisCheck check_eigenbasis(const IntMatrix& m, const Eigenbasis& basis);
EigenbasisCheck check_eigenbasis(const IntMatrix& m, const std::vector<EigenvectorFamily>& families);

/// Re-expresses vectors given in a block labelling in the computed vertex order:
/// out[positions[i]] = v[i].
Eigenbasis relabel(const Eigenbasis& basis, const std::vector<std::size_t>& positions);

struct StructureCheck {
  CliqueDecomposition computed;
  CliqueDecomposition claimed;
  bool match = false;
  std::size_t centralizer_count = 0;
  std::size_t implied_count = 0;
  bool operator==(const StructureCheck&) const = default;
};

struct SpectrumCheck {
  GraphVariant variant = GraphVariant::Centralizer;
  MatrixKind kind = MatrixKind::Adjacency;
  ExactSpectrum oracle;
  ExactSpectrum closed_form;
  bool match = false;
  IntegralityClaim claim;
  bool computed_integral = false;
  bool integrality_match = false;
};

struct EigenbasisEntry {
  GraphVariant variant = GraphVariant::Centralizer;
  EigenbasisCheck check;
  /// True when the computed graph does not have the claimed blocks and the
  /// vectors were checked on the graph built from the claimed structure.
  bool on_claimed_structure = false;
};

/// Cross-checks between independent routes; nullopt when not applicable.
struct ConsistencyChecks {
  bool relations_hold = false;
  bool trace_identities = false;
  bool complement_transfer = false;
  bool multipartite_charpoly = false;
  bool quotient_consistent = false;
  std::optional<bool> cubic_charpoly;
  std::optional<bool> quotient_display;
  std::optional<bool> laplacian_display_transfer;
  std::optional<bool> quotient_integral;

  bool all_hold() const;
};

struct VerificationReport {
  GroupSpec spec;
  std::uint64_t group_order = 0;
  StructureCheck structure;
  std::vector<SpectrumCheck> spectra;
  std::vector<EigenbasisEntry> eigenbasis;
  ConsistencyChecks checks;
  bool degenerate = false;
  std::string degenerate_reason;
  std::vector<std::string> notes;

  const SpectrumCheck& spectrum(GraphVariant variant, MatrixKind kind) const;
  /// Every match, integrality, eigenbasis and consistency field holds.
  bool all_match() const;
  /// A mismatch outside the documented degenerate parameters.
  bool genuine_mismatch() const { return !degenerate && !all_match(); }
};

/// Why the closed forms do not apply at these parameters, if they do not.
std::optional<std::string> degenerate_reason(const GroupSpec& spec);

struct VerifyOptions {
  std::uint64_t budget = kDefaultOrderBudget;
  unsigned threads = 0;  // 0 = hardware concurrency
};

VerificationReport verify_instance(const GroupSpec& spec, const VerifyOptions& options = {});

struct SweepEntry {
  GroupSpec spec;
  std::optional<VerificationReport> report;
  std::string error;
  int error_code = 0;  // 2 invalid parameters, 3 budget exceeded
};

/// Independent verify_instance per spec, run concurrently; output order follows input order.
std::vector<SweepEntry> sweep(const std::vector<GroupSpec>& specs, const VerifyOptions& options = {});

/// Cartesian product of the parameter ranges (inclusive) for one family.
std::vector<GroupSpec> expand_specs(Family family, const std::vector<std::pair<std::int64_t, std::int64_t>>& ranges);

/// Same structure and spectra (ignoring the spec itself).
bool same_outcome(const VerificationReport& a, const VerificationReport& b);

}  // namespace centspec
