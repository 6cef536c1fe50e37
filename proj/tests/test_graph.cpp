#include "doctest.h"

#include <random>

#include "centspec/error.hpp"
#include "centspec/graph.hpp"

using namespace centspec;

namespace {
using Parts = std::vector<std::int64_t>;
}

TEST_CASE("graph basics") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  g.add_edge(2, 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(2, 2));
  CHECK(g.degree(0) == 1);
  CHECK(g.complement().edge_count() == 5);
  CHECK(g.complement().complement() == g);
}

TEST_CASE("clique decomposition") {
  const Parts k5k1{5, 1};
  CHECK(clique_decomposition(clique_union_graph(k5k1)) == CliqueDecomposition({1, 5}));
  CHECK(CliqueDecomposition({1, 5}).parts() == Parts{5, 1});
  CHECK(CliqueDecomposition({10, 6, 5}).to_string() == "[10,6,5]");
  CHECK(CliqueDecomposition({10, 6, 5}).total() == 21);
  CHECK_THROWS_AS(clique_decomposition(path_graph(3)), NotCliqueUnion);
  CHECK_THROWS_AS(CliqueDecomposition({3, 0}), InvalidParams);
  CHECK(clique_decomposition(Graph(3)) == CliqueDecomposition({1, 1, 1}));
}

TEST_CASE("multipartite graphs") {
  const Parts p{3, 1, 3};
  const Graph g = complete_multipartite_graph(p);
  CHECK(g.order() == 7);
  CHECK(g.edge_count() == 3 * 1 + 3 * 3 + 1 * 3);
  CHECK(multipartite_decomposition(g) == CliqueDecomposition({3, 3, 1}));
  CHECK(g == clique_union_graph(p).complement());
}

TEST_CASE("components") {
  const Parts p{2, 3};
  const auto cs = components(clique_union_graph(p));
  REQUIRE(cs.size() == 2);
  CHECK(cs[0] == std::vector<std::size_t>{0, 1});
  CHECK(cs[1] == std::vector<std::size_t>{2, 3, 4});
}

TEST_CASE("centralizer graphs of small groups") {
  const Graph q3 = centralizer_graph(build_group(GroupSpec::quaternion(3)));
  CHECK(q3.order() == 4);
  CHECK(q3.edge_count() == 3);
  CHECK(clique_decomposition(q3) == CliqueDecomposition({3, 1}));
  CHECK(q3.annotations() == std::vector<std::size_t>{6, 4, 4, 4});

  const Graph q2 = centralizer_graph(build_group(GroupSpec::quaternion(2)));
  CHECK(clique_decomposition(q2) == CliqueDecomposition({3}));
  CHECK(cocentralizer_graph(build_group(GroupSpec::quaternion(2))).edge_count() == 0);

  CHECK(clique_decomposition(centralizer_graph(build_group(GroupSpec::dihedral(5)))) == CliqueDecomposition({5, 1}));
  const Graph star = cocentralizer_graph(build_group(GroupSpec::quaternion(4)));
  CHECK(multipartite_decomposition(star) == CliqueDecomposition({4, 1}));
  CHECK(star.edge_count() == 4);

  CHECK(clique_decomposition(centralizer_graph(build_group(GroupSpec::psl(2)))) == CliqueDecomposition({10, 6, 5}));
  CHECK(multipartite_decomposition(cocentralizer_graph(build_group(GroupSpec::psl(2)))) ==
        CliqueDecomposition({10, 6, 5}));
}

TEST_CASE("cocentralizer graph is the complement vertex for vertex") {
  for (const auto& spec : {GroupSpec::quaternion(5), GroupSpec::dihedral(8), GroupSpec::quasidihedral(5),
                           GroupSpec::metacyclic(5, 2), GroupSpec::psl(2)}) {
    const auto g = build_group(spec);
    CHECK(cocentralizer_graph(g) == centralizer_graph(g).complement());
  }
}

TEST_CASE("claimed structures") {
  CHECK(claimed_structure(GroupSpec::quaternion(7)) == CliqueDecomposition({7, 1}));
  CHECK(claimed_structure(GroupSpec::dihedral(7)) == CliqueDecomposition({7, 1}));
  CHECK(claimed_structure(GroupSpec::dihedral(8)) == CliqueDecomposition({4, 1}));
  CHECK(claimed_structure(GroupSpec::quasidihedral(4)) == CliqueDecomposition({4, 1}));
  CHECK(claimed_structure(GroupSpec::metacyclic(5, 3)) == CliqueDecomposition({5, 1}));
  CHECK(claimed_structure(GroupSpec::psl(2)) == CliqueDecomposition({10, 6, 5}));
  CHECK(claimed_structure(GroupSpec::psl(2), GraphVariant::CoCentralizer) == CliqueDecomposition({10, 6, 5}));
  CHECK(claimed_structure(GroupSpec::dihedral(7), GraphVariant::CoCentralizer) == CliqueDecomposition({7, 1}));
  CHECK_THROWS_AS(claimed_structure(GroupSpec::quaternion(1)), InvalidParams);
}

TEST_CASE("computed structure equals the claim away from collisions") {
  for (std::int64_t n = 3; n <= 24; ++n) {
    CAPTURE(n);
    CHECK(clique_decomposition(centralizer_graph(build_group(GroupSpec::quaternion(n)))) ==
          claimed_structure(GroupSpec::quaternion(n)));
    if (n != 4)
      CHECK(clique_decomposition(centralizer_graph(build_group(GroupSpec::dihedral(n)))) ==
            claimed_structure(GroupSpec::dihedral(n)));
  }
  CHECK(clique_decomposition(centralizer_graph(build_group(GroupSpec::dihedral(4)))) == CliqueDecomposition({3}));
}

TEST_CASE("random clique unions round trip") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> count(1, 6), size(1, 7);
    Parts parts;
    for (int i = count(rng); i > 0; --i) parts.push_back(size(rng));
    const CliqueDecomposition d(parts);
    CHECK(clique_decomposition(clique_union_graph(parts)) == d);
    CHECK(multipartite_decomposition(complete_multipartite_graph(parts)) == d);
  }
}

TEST_CASE("variant names") {
  CHECK(parse_variant("centralizer") == GraphVariant::Centralizer);
  CHECK(parse_variant("cocentralizer") == GraphVariant::CoCentralizer);
  CHECK(variant_name(GraphVariant::CoCentralizer) == "cocentralizer");
  CHECK_THROWS_AS(parse_variant("commuting"), InvalidParams);
}
