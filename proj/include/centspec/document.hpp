#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "centspec/verifier.hpp"

namespace centspec {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Everything the CLI prints: version, the command line that produced it, and a payload.
struct OutputDocument {
  int schema_version = kSchemaVersion;
  std::vector<std::string> command;
  Json payload;

  bool operator==(const OutputDocument&) const = default;
};

Json to_json(const OutputDocument& doc);
OutputDocument document_from_json(const Json& j);

/// Coefficients as decimal strings, constant term first.
Json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);

/// With `approx`, adds an "approximate_roots" list per residual (display only).
Json to_json(const ExactSpectrum& s, bool approx = false);
ExactSpectrum spectrum_from_json(const Json& j);

Json to_json(const CliqueDecomposition& d);
CliqueDecomposition decomposition_from_json(const Json& j);

Json to_json(const GroupSpec& spec);
GroupSpec spec_from_json(const Json& j);

Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json to_json(const VerificationReport& r, bool approx = false);
VerificationReport report_from_json(const Json& j);

Json to_json(const SweepEntry& e, bool approx = false);
SweepEntry sweep_entry_from_json(const Json& j);

/// One row per (spec, variant, kind); header first.
std::vector<std::string> csv_columns();
std::string to_csv(const std::vector<SweepEntry>& entries);

}  // namespace centspec
