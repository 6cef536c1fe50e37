#include "doctest.h"

#include <random>

#include "centspec/closed_forms.hpp"
#include "centspec/error.hpp"
#include "oracles.hpp"

using namespace centspec;

namespace {
using Parts = std::vector<std::int64_t>;

ExactSpectrum oracle_spectrum(const Graph& g, MatrixKind kind) {
  return extract_spectrum(oracle::faddeev_leverrier(matrix_of(g, kind)));
}
}  // namespace

TEST_CASE("union of cliques") {
  CHECK(union_cliques_spectrum(CliqueDecomposition({5, 1}), MatrixKind::Laplacian) ==
        ExactSpectrum{{0, 2}, {5, 4}});
  CHECK(union_cliques_spectrum(CliqueDecomposition({2}), MatrixKind::Adjacency) == ExactSpectrum{{1, 1}, {-1, 1}});
  CHECK(union_cliques_spectrum(CliqueDecomposition({3, 3, 1}), MatrixKind::Laplacian) ==
        ExactSpectrum{{0, 3}, {3, 4}});
}

TEST_CASE("union of cliques matches the oracle for all kinds") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<int> count(1, 4), size(1, 7);
    Parts parts;
    for (int i = count(rng); i > 0; --i) parts.push_back(size(rng));
    const Graph g = clique_union_graph(parts);
    for (MatrixKind kind : kAllKinds)
      CHECK(union_cliques_spectrum(CliqueDecomposition(parts), kind) == oracle_spectrum(g, kind));
  }
}

TEST_CASE("multipartite characteristic polynomial") {
  CHECK(multipartite_adj_charpoly(CliqueDecomposition({3, 3, 1})) ==
        IntPolynomial::monomial(4) * IntPolynomial{-18, -15, 0, 1});
  std::mt19937 rng(43);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<int> count(1, 5), size(1, 6);
    Parts parts;
    for (int i = count(rng); i > 0; --i) parts.push_back(size(rng));
    CHECK(multipartite_adj_charpoly(CliqueDecomposition(parts)) ==
          oracle::faddeev_leverrier(matrix_of(complete_multipartite_graph(parts), MatrixKind::Adjacency)));
  }
}

TEST_CASE("stars") {
  CHECK(star_spectrum(4, MatrixKind::Adjacency) == ExactSpectrum{{2, 1}, {-2, 1}, {0, 3}});
  CHECK_FALSE(star_spectrum(2, MatrixKind::Adjacency).is_integral());
  for (std::int64_t n = 1; n <= 15; ++n) {
    CHECK(star_spectrum(n, MatrixKind::Laplacian) == star_spectrum(n, MatrixKind::SignlessLaplacian));
    const Parts star{n, 1};
    for (MatrixKind kind : kAllKinds)
      CHECK(star_spectrum(n, kind) == oracle_spectrum(complete_multipartite_graph(star), kind));
  }
}

TEST_CASE("family closed forms at named parameters") {
  CHECK(family_spectrum(GroupSpec::quaternion(9), GraphVariant::CoCentralizer, MatrixKind::Adjacency) ==
        ExactSpectrum{{3, 1}, {-3, 1}, {0, 8}});
  CHECK(family_spectrum(GroupSpec::quaternion(5), GraphVariant::Centralizer, MatrixKind::Adjacency) ==
        ExactSpectrum{{-1, 4}, {0, 1}, {4, 1}});
  CHECK(family_spectrum(GroupSpec::quaternion(5), GraphVariant::CoCentralizer, MatrixKind::Laplacian) ==
        ExactSpectrum{{0, 1}, {1, 4}, {6, 1}});
  CHECK(family_spectrum(GroupSpec::quasidihedral(5), GraphVariant::Centralizer, MatrixKind::Laplacian) ==
        ExactSpectrum{{0, 2}, {8, 7}});
  CHECK(family_spectrum(GroupSpec::psl(2), GraphVariant::Centralizer, MatrixKind::Adjacency) ==
        ExactSpectrum{{-1, 18}, {4, 1}, {9, 1}, {5, 1}});
  CHECK(family_spectrum(GroupSpec::psl(2), GraphVariant::CoCentralizer, MatrixKind::Laplacian) ==
        ExactSpectrum{{0, 1}, {16, 4}, {11, 9}, {15, 5}, {21, 2}});
  CHECK(family_spectrum(GroupSpec::psl(1), GraphVariant::CoCentralizer, MatrixKind::SignlessLaplacian) ==
        ExactSpectrum{{1, 1}, {4, 5}, {9, 1}});

  ExactSpectrum k1_adj{{0, 4}, {-3, 1}};
  k1_adj.add_residual(IntPolynomial{-6, -3, 1}, 1);
  CHECK(family_spectrum(GroupSpec::psl(1), GraphVariant::CoCentralizer, MatrixKind::Adjacency) == k1_adj);
  CHECK_THROWS_AS(family_spectrum(GroupSpec::psl(0), GraphVariant::Centralizer, MatrixKind::Adjacency), InvalidParams);
}

TEST_CASE("closed forms have the claimed dimension") {
  std::vector<GroupSpec> specs;
  for (std::int64_t n = 2; n <= 20; ++n) specs.push_back(GroupSpec::quaternion(n));
  for (std::int64_t n = 3; n <= 20; ++n) specs.push_back(GroupSpec::dihedral(n));
  for (std::int64_t n = 4; n <= 10; ++n) specs.push_back(GroupSpec::quasidihedral(n));
  for (std::int64_t k = 1; k <= 5; ++k) specs.push_back(GroupSpec::psl(k));
  for (const auto& spec : specs)
    for (GraphVariant v : {GraphVariant::Centralizer, GraphVariant::CoCentralizer})
      for (MatrixKind kind : kAllKinds) {
        CAPTURE(spec.to_string());
        CHECK(family_spectrum(spec, v, kind).dimension() == claimed_structure(spec).total());
      }
}

TEST_CASE("closed forms equal the oracle on the claimed graph") {
  // independent of group construction: build the graph from the claimed parts
  std::vector<GroupSpec> specs{GroupSpec::quaternion(6), GroupSpec::dihedral(9), GroupSpec::dihedral(10),
                               GroupSpec::quasidihedral(6), GroupSpec::metacyclic(7, 2), GroupSpec::psl(1),
                               GroupSpec::psl(2)};
  for (const auto& spec : specs) {
    CAPTURE(spec.to_string());
    const Graph cent = clique_union_graph(claimed_structure(spec).parts());
    for (MatrixKind kind : kAllKinds) {
      CHECK(family_spectrum(spec, GraphVariant::Centralizer, kind) == oracle_spectrum(cent, kind));
      CHECK(family_spectrum(spec, GraphVariant::CoCentralizer, kind) == oracle_spectrum(cent.complement(), kind));
    }
  }
}

TEST_CASE("PSL helpers") {
  CHECK(psl_block_sizes(2) == std::array<std::int64_t, 3>{5, 10, 6});
  CHECK(psl_cocentralizer_quotient(1) == IntMatrix{{4, 3, 1}, {3, 4, 1}, {3, 3, 6}});
  CHECK(psl_cocentralizer_cubic(1) == IntPolynomial{-18, -15, 0, 1});
  for (std::int64_t k = 1; k <= 6; ++k) {
    const auto sizes = psl_block_sizes(k);
    CHECK(psl_cocentralizer_quotient(k) ==
          quotient_matrix(sizes, MatrixKind::SignlessLaplacian, PartitionVariant::Multipartite));
    CHECK(psl_cocentralizer_adjacency_charpoly(k) == multipartite_adj_charpoly(CliqueDecomposition({sizes[0], sizes[1], sizes[2]})));
  }
}

TEST_CASE("PSL eigenbases") {
  const Eigenbasis b1 = psl_eigenbasis(1, GraphVariant::Centralizer);
  CHECK(b1.dimension == 7);
  bool found = false;
  for (const auto& f : b1.families)
    if (f.eigenvalue == 1 && f.label == "differences[block 1]") {
      found = true;
      CHECK(f.vectors.size() == 2);
      CHECK(f.vectors[0].size() == 7);
    }
  CHECK(found);
  bool third = false;
  for (const auto& f : b1.families)
    if (f.label == "indicator[block 3]") third = f.eigenvalue == 0;
  CHECK(third);

  const Eigenbasis c2 = psl_eigenbasis(2, GraphVariant::CoCentralizer);
  bool eleven = false;
  for (const auto& f : c2.families)
    if (f.eigenvalue == 11) eleven = f.vectors.size() == 9 && f.claimed_multiplicity == 9;
  CHECK(eleven);
  CHECK(c2.block.has_value());  // L_P is not integral at k = 2
  CHECK_FALSE(psl_eigenbasis(1, GraphVariant::CoCentralizer).block.has_value());
}

TEST_CASE("integrality claims") {
  auto claim = [](const GroupSpec& s, GraphVariant v, MatrixKind k) { return integrality_claim(s, v, k); };
  const auto q7 = claim(GroupSpec::quaternion(7), GraphVariant::CoCentralizer, MatrixKind::Adjacency);
  CHECK(q7.kind == ClaimKind::Condition);
  CHECK_FALSE(q7.holds);
  CHECK(claim(GroupSpec::quasidihedral(6), GraphVariant::CoCentralizer, MatrixKind::Adjacency).holds);
  CHECK_FALSE(claim(GroupSpec::quasidihedral(5), GraphVariant::CoCentralizer, MatrixKind::Adjacency).holds);
  CHECK(claim(GroupSpec::dihedral(8), GraphVariant::CoCentralizer, MatrixKind::Adjacency).holds);
  CHECK(claim(GroupSpec::dihedral(9), GraphVariant::CoCentralizer, MatrixKind::Adjacency).holds);
  CHECK_FALSE(claim(GroupSpec::dihedral(10), GraphVariant::CoCentralizer, MatrixKind::Adjacency).holds);
  CHECK(claim(GroupSpec::psl(3), GraphVariant::Centralizer, MatrixKind::SignlessLaplacian).kind == ClaimKind::Always);
  CHECK(claim(GroupSpec::psl(3), GraphVariant::CoCentralizer, MatrixKind::Laplacian).holds);
  CHECK(claim(GroupSpec::psl(1), GraphVariant::CoCentralizer, MatrixKind::SignlessLaplacian).holds);
  CHECK_FALSE(claim(GroupSpec::psl(2), GraphVariant::CoCentralizer, MatrixKind::SignlessLaplacian).holds);
  CHECK(is_perfect_square(0));
  CHECK(is_perfect_square(49));
  CHECK_FALSE(is_perfect_square(50));
  CHECK_FALSE(is_perfect_square(-4));
}
