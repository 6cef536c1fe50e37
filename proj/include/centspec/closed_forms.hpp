#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "centspec/graph.hpp"
#include "centspec/group.hpp"
#include "centspec/spectra.hpp"

namespace centspec {

/// Spectrum of a disjoint union of cliques with the given sizes.
ExactSpectrum union_cliques_spectrum(const CliqueDecomposition& parts, MatrixKind kind);

/// Adjacency characteristic polynomial of the complete multipartite graph:
/// x^{P-m} [ prod (x + p_i) - sum_i p_i prod_{j != i} (x + p_j) ].
IntPolynomial multipartite_adj_charpoly(const CliqueDecomposition& parts);

/// Spectrum of the star K_{1,n}.
ExactSpectrum star_spectrum(std::int64_t n, MatrixKind kind);

/// Closed-form spectrum stated for the family's centralizer or co-centralizer graph.
ExactSpectrum family_spectrum(const GroupSpec& spec, GraphVariant variant, MatrixKind kind);

/// PSL(2, 2^k) block sizes in the labelling used by the closed forms:
/// 2^k + 1, 2^{k-1}(2^k + 1), 2^{k-1}(2^k - 1).
std::array<std::int64_t, 3> psl_block_sizes(std::int64_t k);

/// The 3x3 quotient matrix whose eigenvalues complete the co-centralizer
/// signless Laplacian spectrum, evaluated entry by entry from its closed form.
IntMatrix psl_cocentralizer_quotient(std::int64_t k);

/// x^3 - (2^{4k-2} + 3*2^{2k-2} + 2^{3k}) x + (-2^{5k-1} - 2^{4k-1} + 2^{3k-1} + 2^{2k-1})
IntPolynomial psl_cocentralizer_cubic(std::int64_t k);

/// x^{2^k + 2^{2k} - 2} times the cubic above.
IntPolynomial psl_cocentralizer_adjacency_charpoly(std::int64_t k);

struct EigenvectorFamily {
  std::string label;
  std::int64_t eigenvalue = 0;
  std::vector<std::vector<std::int64_t>> vectors;
  std::int64_t claimed_multiplicity = 0;
};

/// Span of `basis` is invariant: M * basis[j] = sum_i action(i, j) * basis[i].
struct InvariantBlock {
  std::vector<std::vector<std::int64_t>> basis;
  IntMatrix action;
};

struct Eigenbasis {
  std::size_t dimension = 0;
  std::vector<EigenvectorFamily> families;
  /// Present when part of the spectrum is irrational and is certified as a block instead.
  std::optional<InvariantBlock> block;
};

/// Explicit eigenvectors of the signless Laplacian of the PSL(2, 2^k) centralizer
/// (or co-centralizer) graph, in the block labelling of psl_block_sizes.
Eigenbasis psl_eigenbasis(std::int64_t k, GraphVariant variant);

enum class ClaimKind { Always, Never, Condition };

struct IntegralityClaim {
  ClaimKind kind = ClaimKind::Always;
  /// Human-readable predicate for ClaimKind::Condition.
  std::string condition;
  /// The claim evaluated at the given parameters.
  bool holds = true;
};

std::string_view claim_kind_name(ClaimKind kind);

IntegralityClaim integrality_claim(const GroupSpec& spec, GraphVariant variant, MatrixKind kind);

bool is_perfect_square(std::int64_t n);

}  // namespace centspec
