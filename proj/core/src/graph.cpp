#include "qgc/graph.hpp"

#include <algorithm>
#include <queue>

#include "qgc/error.hpp"

namespace qgc {

CombGraph::CombGraph(std::size_t n, std::vector<Edge> edges) : n_(n) {
  for (auto& [u, v] : edges) {
    if (u == v) throw InvalidInput("loop at vertex " + std::to_string(u));
    if (u >= n || v >= n) {
      throw InvalidInput("edge {" + std::to_string(u) + "," + std::to_string(v) +
                         "} has an endpoint outside 0.." + std::to_string(n) + "-1");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw InvalidInput("multi-edge in edge list");
  }
  edges_ = std::move(edges);
}

bool CombGraph::adjacent(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::size_t CombGraph::degree(Vertex v) const {
  if (v >= n_) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
  std::size_t d = 0;
  for (const auto& [a, b] : edges_) d += (a == v) + (b == v);
  return d;
}

std::vector<std::size_t> CombGraph::degrees() const {
  std::vector<std::size_t> d(n_, 0);
  for (const auto& [a, b] : edges_) {
    ++d[a];
    ++d[b];
  }
  return d;
}

std::vector<std::vector<Vertex>> CombGraph::adjacency_lists() const {
  std::vector<std::vector<Vertex>> adj(n_);
  for (const auto& [a, b] : edges_) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

CombGraph CombGraph::permuted(const std::vector<Vertex>& perm) const {
  if (perm.size() != n_) throw InvalidInput("permutation size does not match vertex count");
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& [a, b] : edges_) out.emplace_back(perm[a], perm[b]);
  return CombGraph(n_, std::move(out));
}

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::size_t degree(const CombGraph& g, Vertex v) { return g.degree(v); }

bool is_connected(const CombGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return false;
  const auto adj = g.adjacency_lists();
  std::vector<bool> seen(n, false);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == n;
}

bool is_tree(const CombGraph& g) {
  return is_connected(g) && g.edge_count() + 1 == g.vertex_count();
}

bool is_bipartite(const CombGraph& g) {
  const auto adj = g.adjacency_lists();
  std::vector<int> side(g.vertex_count(), -1);
  for (Vertex start = 0; start < g.vertex_count(); ++start) {
    if (side[start] != -1) continue;
    side[start] = 0;
    std::queue<Vertex> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      const Vertex v = frontier.front();
      frontier.pop();
      for (Vertex w : adj[v]) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          frontier.push(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

InteriorSubgraph interior_subgraph(const CombGraph& g, const VertexSet& removed) {
  const std::size_t n = g.vertex_count();
  for (Vertex v : removed.members()) {
    if (v >= n) throw InvalidInput("Dirichlet vertex " + std::to_string(v) + " out of range");
  }
  if (removed.size() == n) throw InvalidInput("cannot delete every vertex: empty pencil");

  const auto parent_degrees = g.degrees();
  InteriorSubgraph out;
  std::vector<Vertex> relabel(n, n);
  for (Vertex v = 0; v < n; ++v) {
    if (removed.contains(v)) continue;
    relabel[v] = out.original_vertex.size();
    out.original_vertex.push_back(v);
    out.degrees_in_parent.push_back(parent_degrees[v]);
  }
  std::vector<Edge> kept;
  for (const auto& [a, b] : g.edges()) {
    if (relabel[a] < n && relabel[b] < n) kept.emplace_back(relabel[a], relabel[b]);
  }
  out.graph = CombGraph(out.original_vertex.size(), std::move(kept));
  return out;
}

CombGraph fuzzy_ball(std::size_t r, std::size_t s) {
  if (r < 1 || s < 1) throw InvalidInput("fuzzy ball needs r >= 1 and s >= 1");
  if (r + s < 4) throw InvalidInput("fuzzy ball needs r + s >= 4");
  const std::size_t n = r + s;
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  for (Vertex i = 0; i < r; ++i) edges.emplace_back(i, n);
  for (Vertex i = r; i < n; ++i) edges.emplace_back(i, n + 1);
  return CombGraph(n + 2, std::move(edges));
}

CombGraph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return CombGraph(n, std::move(edges));
}

CombGraph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return CombGraph(n, std::move(edges));
}

CombGraph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidInput("a simple cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return CombGraph(n, std::move(edges));
}

CombGraph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return CombGraph(leaves + 1, std::move(edges));
}

CombGraph fixture(std::string_view name) {
  if (name == "fig2-left") return fuzzy_ball(2, 2);
  if (name == "fig2-right") return fuzzy_ball(1, 3);
  if (name == "fig5-left") {
    return CombGraph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {4, 7}, {3, 8}});
  }
  if (name == "fig5-right") {
    return CombGraph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 6}, {4, 7}, {2, 5}, {2, 8}});
  }
  throw InvalidInput("unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string> fixture_names() {
  return {"fig2-left", "fig2-right", "fig5-left", "fig5-right"};
}

}  // namespace qgc
