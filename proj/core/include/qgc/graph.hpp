#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qgc {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1. Edges are stored normalized
/// (first < second), sorted, and unique; the constructor rejects loops and
/// out-of-range endpoints. Stands in for the equilateral metric graph.
class CombGraph {
 public:
  CombGraph() = default;
  CombGraph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const;
  std::vector<std::size_t> degrees() const;
  std::vector<std::vector<Vertex>> adjacency_lists() const;

  /// Relabels vertex v to perm[v].
  CombGraph permuted(const std::vector<Vertex>& perm) const;

  friend bool operator==(const CombGraph&, const CombGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// Sorted, duplicate-free set of vertices (Dirichlet set / lead roots).
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  const std::vector<Vertex>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Automorphism orbits. orbit_of[v] indexes into representatives, which
/// holds the lowest vertex of each orbit in increasing order.
struct OrbitPartition {
  std::vector<std::size_t> orbit_of;
  std::vector<Vertex> representatives;

  std::size_t orbit_count() const { return representatives.size(); }
};

std::size_t degree(const CombGraph& g, Vertex v);
bool is_connected(const CombGraph& g);
bool is_tree(const CombGraph& g);
bool is_bipartite(const CombGraph& g);

/// Result of deleting a vertex set. `degrees_in_parent` lists the degree
/// each surviving vertex had in the ORIGINAL graph, in surviving order;
/// `original_vertex` maps new labels back.
struct InteriorSubgraph {
  CombGraph graph;
  std::vector<std::size_t> degrees_in_parent;
  std::vector<Vertex> original_vertex;
};

InteriorSubgraph interior_subgraph(const CombGraph& g, const VertexSet& removed);

/// Canonical labeling limit; both canonical_form and vertex_orbits refuse
/// larger graphs.
inline constexpr std::size_t kMaxCanonicalVertices = 12;

/// Canonically relabeled copy: two graphs are isomorphic iff their
/// canonical forms compare equal.
CombGraph canonical_form(const CombGraph& g);

/// Same canonical labeling, with vertex `root` distinguished. Equal for
/// (g, u) and (g, v) iff an automorphism of g maps u to v.
CombGraph rooted_canonical_form(const CombGraph& g, Vertex root);

/// Canonical adjacency code (upper-triangle bit string, row-major over
/// i<j). Used as an ordering/hash key for canonical forms.
std::vector<std::uint64_t> adjacency_code(const CombGraph& g);

OrbitPartition vertex_orbits(const CombGraph& g);

/// Complete graph on r+s bulk vertices 0..r+s-1, plus w1 = r+s joined to
/// 0..r-1 and w2 = r+s+1 joined to r..r+s-1.
CombGraph fuzzy_ball(std::size_t r, std::size_t s);

CombGraph complete_graph(std::size_t n);
CombGraph path_graph(std::size_t n);
CombGraph cycle_graph(std::size_t n);
CombGraph star_graph(std::size_t leaves);

/// One representative per isomorphism class of connected graphs on n
/// vertices (1 <= n <= 7), in canonical form, sorted by adjacency code.
std::vector<CombGraph> enumerate_connected(std::size_t n);

/// One representative per isomorphism class of trees on n vertices
/// (1 <= n <= 10), in canonical form, sorted by adjacency code.
std::vector<CombGraph> enumerate_trees(std::size_t n);

/// Named graphs from the figures: fig2-left, fig2-right, fig5-left,
/// fig5-right.
CombGraph fixture(std::string_view name);
std::vector<std::string> fixture_names();

}  // namespace qgc
