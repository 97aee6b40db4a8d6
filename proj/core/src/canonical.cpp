// Canonical labeling by individualization-refinement.
//
// Colour refinement on an ordered partition is label-invariant, so the
// search tree over "individualize a vertex of the first non-singleton cell"
// is mapped onto itself by any isomorphism. The canonical labeling is the
// leaf with the smallest adjacency code. Branches for a vertex that is a
// twin (same neighbourhood up to each other) of an already explored vertex
// are skipped: swapping the twins is an automorphism fixing the current
// node, so it yields exactly the same set of leaf codes.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>

#include "qgc/error.hpp"
#include "qgc/graph.hpp"

namespace qgc {
namespace {

using Mask = std::uint32_t;
using Code = std::vector<std::uint64_t>;

struct Labeler {
  std::size_t n;
  std::vector<Mask> adj;
  std::optional<Code> best_code;
  std::vector<std::size_t> best_position;

  explicit Labeler(const CombGraph& g) : n(g.vertex_count()), adj(n, 0) {
    for (const auto& [a, b] : g.edges()) {
      adj[a] |= Mask{1} << b;
      adj[b] |= Mask{1} << a;
    }
  }

  // Colours are 0..k-1 with colour order meaningful. Returns the number of
  // cells of the equitable refinement.
  std::size_t refine(std::vector<std::size_t>& colour) const {
    std::size_t cells = 1 + *std::max_element(colour.begin(), colour.end());
    while (true) {
      std::vector<std::vector<std::size_t>> signature(n);
      for (std::size_t v = 0; v < n; ++v) {
        auto& sig = signature[v];
        sig.assign(cells + 1, 0);
        sig[0] = colour[v];
        for (std::size_t w = 0; w < n; ++w) {
          if (adj[v] >> w & 1U) ++sig[1 + colour[w]];
        }
      }
      std::vector<std::size_t> order(n);
      for (std::size_t v = 0; v < n; ++v) order[v] = v;
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return signature[a] < signature[b]; });
      std::size_t next = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && signature[order[i]] != signature[order[i - 1]]) ++next;
        colour[order[i]] = next;
      }
      if (next + 1 == cells) return cells;
      cells = next + 1;
    }
  }

  bool twins(std::size_t u, std::size_t v) const {
    const Mask both = (Mask{1} << u) | (Mask{1} << v);
    return (adj[u] & ~both) == (adj[v] & ~both);
  }

  Code encode(const std::vector<std::size_t>& position) const {
    std::vector<std::size_t> at(n);
    for (std::size_t v = 0; v < n; ++v) at[position[v]] = v;
    const std::size_t bits = n * (n - 1) / 2;
    Code code((bits + 63) / 64, 0);
    std::size_t t = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j, ++t) {
        if (adj[at[i]] >> at[j] & 1U) code[t / 64] |= std::uint64_t{1} << (63 - t % 64);
      }
    }
    return code;
  }

  void search(std::vector<std::size_t> colour) {
    const std::size_t cells = refine(colour);
    if (cells == n) {
      Code code = encode(colour);
      if (!best_code || code < *best_code) {
        best_code = std::move(code);
        best_position = colour;
      }
      return;
    }
    std::vector<std::size_t> size(cells, 0);
    for (std::size_t c : colour) ++size[c];
    std::size_t target = 0;
    while (size[target] == 1) ++target;

    std::vector<std::size_t> explored;
    for (std::size_t v = 0; v < n; ++v) {
      if (colour[v] != target) continue;
      if (std::any_of(explored.begin(), explored.end(),
                      [&](std::size_t u) { return twins(u, v); })) {
        continue;
      }
      explored.push_back(v);
      std::vector<std::size_t> child = colour;
      for (std::size_t w = 0; w < n; ++w) {
        if (child[w] > target || (child[w] == target && w != v)) ++child[w];
      }
      search(std::move(child));
    }
  }
};

void check_size(const CombGraph& g) {
  if (g.vertex_count() > kMaxCanonicalVertices) {
    throw InvalidInput("canonical labeling supports at most " +
                       std::to_string(kMaxCanonicalVertices) + " vertices, got " +
                       std::to_string(g.vertex_count()));
  }
}

CombGraph label(const CombGraph& g, std::vector<std::size_t> initial) {
  if (g.vertex_count() <= 1) return g;
  Labeler labeler(g);
  labeler.search(std::move(initial));
  return g.permuted(labeler.best_position);
}

}  // namespace

CombGraph canonical_form(const CombGraph& g) {
  check_size(g);
  return label(g, std::vector<std::size_t>(g.vertex_count(), 0));
}

CombGraph rooted_canonical_form(const CombGraph& g, Vertex root) {
  check_size(g);
  if (root >= g.vertex_count()) throw InvalidInput("root vertex out of range");
  std::vector<std::size_t> initial(g.vertex_count(), 1);
  initial[root] = 0;
  return label(g, std::move(initial));
}

std::vector<std::uint64_t> adjacency_code(const CombGraph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t bits = n < 2 ? 0 : n * (n - 1) / 2;
  std::vector<std::uint64_t> code((bits + 63) / 64, 0);
  for (const auto& [i, j] : g.edges()) {
    // Row-major index of pair (i, j), i < j.
    const std::size_t t = i * n - i * (i + 1) / 2 + (j - i - 1);
    code[t / 64] |= std::uint64_t{1} << (63 - t % 64);
  }
  return code;
}

OrbitPartition vertex_orbits(const CombGraph& g) {
  check_size(g);
  OrbitPartition out;
  out.orbit_of.assign(g.vertex_count(), 0);
  std::map<std::vector<std::uint64_t>, std::size_t> seen;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto [it, fresh] = seen.try_emplace(adjacency_code(rooted_canonical_form(g, v)),
                                        out.representatives.size());
    if (fresh) out.representatives.push_back(v);
    out.orbit_of[v] = it->second;
  }
  return out;
}

}  // namespace qgc
