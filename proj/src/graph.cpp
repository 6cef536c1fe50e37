#include "centspec/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "centspec/error.hpp"

namespace centspec {

std::string_view variant_name(GraphVariant variant) {
  return variant == GraphVariant::Centralizer ? "centralizer" : "cocentralizer";
}

GraphVariant parse_variant(std::string_view name) {
  if (name == "centralizer" || name == "cent") return GraphVariant::Centralizer;
  if (name == "cocentralizer" || name == "co-centralizer" || name == "cocent") return GraphVariant::CoCentralizer;
  throw InvalidParams("unknown graph variant '" + std::string(name) + "'");
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) return;
  adj_[u * n_ + v] = 1;
  adj_[v * n_ + u] = 1;
}

std::size_t Graph::degree(std::size_t v) const {
  return static_cast<std::size_t>(std::count(adj_.begin() + v * n_, adj_.begin() + (v + 1) * n_, 1));
}

std::size_t Graph::edge_count() const {
  return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), 1)) / 2;
}

Graph Graph::complement() const {
  Graph out(n_);
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) out.add_edge(u, v);
  out.annotations_ = annotations_;
  return out;
}

CliqueDecomposition::CliqueDecomposition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
  for (std::int64_t p : parts_) {
    if (p <= 0) throw InvalidParams("clique sizes must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::int64_t CliqueDecomposition::total() const {
  return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

std::string CliqueDecomposition::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) out << (i ? "," : "") << parts_[i];
  out << ']';
  return out.str();
}

Graph clique_union_graph(std::span<const std::int64_t> parts) {
  const auto n = static_cast<std::size_t>(std::accumulate(parts.begin(), parts.end(), std::int64_t{0}));
  Graph g(n);
  std::size_t start = 0;
  for (std::int64_t p : parts) {
    for (std::size_t u = start; u < start + p; ++u)
      for (std::size_t v = u + 1; v < start + p; ++v) g.add_edge(u, v);
    start += static_cast<std::size_t>(p);
  }
  return g;
}

Graph complete_multipartite_graph(std::span<const std::int64_t> parts) {
  return clique_union_graph(parts).complement();
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph centralizer_graph(const std::vector<ElementSubset>& proper) {
  Graph g(proper.size());
  std::vector<std::size_t> sizes;
  sizes.reserve(proper.size());
  for (const ElementSubset& c : proper) sizes.push_back(c.cardinality());
  for (std::size_t u = 0; u < proper.size(); ++u)
    for (std::size_t v = u + 1; v < proper.size(); ++v)
      if (sizes[u] == sizes[v]) g.add_edge(u, v);
  g.set_annotations(std::move(sizes));
  return g;
}

Graph centralizer_graph(const FiniteGroup& g) { return centralizer_graph(proper_centralizers(g)); }

Graph cocentralizer_graph(const FiniteGroup& g) { return centralizer_graph(g).complement(); }

std::vector<std::vector<std::size_t>> components(const Graph& graph) {
  const std::size_t n = graph.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<std::size_t> comp{root};
    seen[root] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (std::size_t v = 0; v < n; ++v) {
        if (!seen[v] && graph.adjacent(comp[head], v)) {
          seen[v] = true;
          comp.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

CliqueDecomposition clique_decomposition(const Graph& graph) {
  std::vector<std::int64_t> sizes;
  for (const auto& comp : components(graph)) {
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = i + 1; j < comp.size(); ++j)
        if (!graph.adjacent(comp[i], comp[j])) {
          throw NotCliqueUnion("component containing vertex " + std::to_string(comp[0]) + " is not complete");
        }
    sizes.push_back(static_cast<std::int64_t>(comp.size()));
  }
  return CliqueDecomposition(std::move(sizes));
}

CliqueDecomposition multipartite_decomposition(const Graph& graph) {
  return clique_decomposition(graph.complement());
}

CliqueDecomposition claimed_structure(const GroupSpec& spec, GraphVariant) {
  spec.validate();
  const std::int64_t p0 = spec.params[0];
  const auto dihedral_rule = [](std::int64_t n) {
    return CliqueDecomposition({n % 2 == 1 ? n : n / 2, 1});
  };
  switch (spec.family) {
    case Family::GeneralizedQuaternion: return CliqueDecomposition({p0, 1});
    case Family::Dihedral: return dihedral_rule(p0);
    case Family::Quasidihedral: return CliqueDecomposition({std::int64_t{1} << (p0 - 2), 1});
    case Family::Metacyclic: return dihedral_rule(p0);
    case Family::ProjectiveSpecialLinear: {
      const std::int64_t q = std::int64_t{1} << p0;
      return CliqueDecomposition({q / 2 * (q + 1), q / 2 * (q - 1), q + 1});
    }
  }
  throw InvalidParams("unknown family");
}

}  // namespace centspec
