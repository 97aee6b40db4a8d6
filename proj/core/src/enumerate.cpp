#include <algorithm>
#include <map>

#include "qgc/error.hpp"
#include "qgc/graph.hpp"

namespace qgc {
namespace {

using Catalog = std::map<std::vector<std::uint64_t>, CombGraph>;

void insert_canonical(Catalog& catalog, const CombGraph& g) {
  CombGraph canon = canonical_form(g);
  auto key = adjacency_code(canon);
  catalog.try_emplace(std::move(key), std::move(canon));
}

std::vector<CombGraph> values(Catalog&& catalog) {
  std::vector<CombGraph> out;
  out.reserve(catalog.size());
  for (auto& [key, g] : catalog) out.push_back(std::move(g));
  return out;
}

CombGraph with_new_vertex(const CombGraph& g, const std::vector<Vertex>& neighbours) {
  std::vector<Edge> edges = g.edges();
  const Vertex fresh = g.vertex_count();
  for (Vertex v : neighbours) edges.emplace_back(v, fresh);
  return CombGraph(fresh + 1, std::move(edges));
}

}  // namespace

// Every connected graph on n >= 2 vertices has a non-cut vertex (a leaf of
// any spanning tree), so it arises from a connected graph on n-1 vertices by
// adding one vertex joined to a nonempty subset.
std::vector<CombGraph> enumerate_connected(std::size_t n) {
  if (n < 1 || n > 7) throw InvalidInput("enumerate_connected supports 1 <= n <= 7");
  if (n == 1) return {CombGraph(1, {})};
  Catalog catalog;
  for (const CombGraph& smaller : enumerate_connected(n - 1)) {
    const std::size_t m = smaller.vertex_count();
    for (std::uint32_t subset = 1; subset < (1U << m); ++subset) {
      std::vector<Vertex> neighbours;
      for (Vertex v = 0; v < m; ++v) {
        if (subset >> v & 1U) neighbours.push_back(v);
      }
      insert_canonical(catalog, with_new_vertex(smaller, neighbours));
    }
  }
  return values(std::move(catalog));
}

// Every tree on n >= 2 vertices is a smaller tree plus a pendant vertex;
// attaching at one vertex per automorphism orbit suffices.
std::vector<CombGraph> enumerate_trees(std::size_t n) {
  if (n < 1 || n > 10) throw InvalidInput("enumerate_trees supports 1 <= n <= 10");
  if (n == 1) return {CombGraph(1, {})};
  Catalog catalog;
  for (const CombGraph& smaller : enumerate_trees(n - 1)) {
    for (Vertex v : vertex_orbits(smaller).representatives) {
      insert_canonical(catalog, with_new_vertex(smaller, {v}));
    }
  }
  return values(std::move(catalog));
}

}  // namespace qgc
