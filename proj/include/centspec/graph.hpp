#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "centspec/group.hpp"

namespace centspec {

enum class GraphVariant { Centralizer, CoCentralizer };

std::string_view variant_name(GraphVariant variant);
GraphVariant parse_variant(std::string_view name);

/// Simple undirected graph stored as a dense adjacency relation.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), adj_(n * n, 0) {}

  std::size_t order() const { return n_; }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u * n_ + v] != 0; }
  /// Ignores self-loops; the relation stays irreflexive.
  void add_edge(std::size_t u, std::size_t v);
  std::size_t degree(std::size_t v) const;
  std::size_t edge_count() const;
  Graph complement() const;

  /// Optional per-vertex annotation (centralizer cardinality for group graphs).
  const std::vector<std::size_t>& annotations() const { return annotations_; }
  void set_annotations(std::vector<std::size_t> values) { annotations_ = std::move(values); }

  bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::size_t> annotations_;
};

/// Multiset of clique sizes, kept sorted descending.
class CliqueDecomposition {
 public:
  CliqueDecomposition() = default;
  /// Sorts descending; throws InvalidParams on a non-positive part.
  explicit CliqueDecomposition(std::vector<std::int64_t> parts);

  const std::vector<std::int64_t>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  std::int64_t total() const;
  std::string to_string() const;

  bool operator==(const CliqueDecomposition&) const = default;

 private:
  std::vector<std::int64_t> parts_;
};

Graph clique_union_graph(std::span<const std::int64_t> parts);
Graph complete_multipartite_graph(std::span<const std::int64_t> parts);
Graph path_graph(std::size_t n);

/// Vertices are the proper centralizers in canonical order; edges join equal cardinalities.
Graph centralizer_graph(const FiniteGroup& g);
Graph centralizer_graph(const std::vector<ElementSubset>& proper);
Graph cocentralizer_graph(const FiniteGroup& g);

/// Component sizes of a disjoint union of cliques; throws NotCliqueUnion otherwise.
CliqueDecomposition clique_decomposition(const Graph& graph);
/// Part sizes of a complete multipartite graph (clique decomposition of the complement).
CliqueDecomposition multipartite_decomposition(const Graph& graph);
/// Vertex sets of the connected components, each sorted, ordered by first vertex.
std::vector<std::vector<std::size_t>> components(const Graph& graph);

/// Published structure for the family as part sizes: cliques of the centralizer
/// graph, or parts of the complete multipartite co-centralizer graph.
CliqueDecomposition claimed_structure(const GroupSpec& spec, GraphVariant variant = GraphVariant::Centralizer);

}  // namespace centspec
