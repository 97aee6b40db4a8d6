// Slow, obviously-correct reference implementations used only by tests.
#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qgc/graph.hpp"
#include "qgc/int_poly.hpp"
#include "qgc/multi_poly.hpp"

namespace qgc::testing {

/// Minimum upper-triangle adjacency string over all n! relabelings.
inline std::string brute_canonical(const CombGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string code;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) code.push_back(g.adjacent(perm[i], perm[j]) ? '1' : '0');
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Automorphism orbits by trying every permutation.
inline std::vector<std::size_t> brute_orbit_ids(const CombGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (g.permuted(perm) == g) {
      for (std::size_t v = 0; v < n; ++v) {
        const std::size_t lo = std::min(id[v], id[perm[v]]);
        const std::size_t old_a = id[v];
        const std::size_t old_b = id[perm[v]];
        for (auto& x : id)
          if (x == old_a || x == old_b) x = lo;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return id;
}

/// Isomorphism classes of connected graphs on n vertices via all edge
/// subsets, keyed by brute_canonical.
inline std::set<std::string> brute_connected_classes(std::size_t n) {
  std::vector<Edge> all;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) all.emplace_back(i, j);
  std::set<std::string> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < all.size(); ++k)
      if (mask >> k & 1U) edges.push_back(all[k]);
    CombGraph g(n, edges);
    if (is_connected(g)) out.insert(brute_canonical(g));
  }
  return out;
}

/// AHU encoding of a tree rooted at r.
inline std::string ahu(const std::vector<std::vector<Vertex>>& adj, Vertex r, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : adj[r])
    if (w != parent) kids.push_back(ahu(adj, w, r));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) s += k;
  return s + ")";
}

/// Unrooted tree invariant: AHU code from the center(s), minimum taken.
inline std::string tree_code(const CombGraph& t) {
  const auto adj = t.adjacency_lists();
  const std::size_t n = t.vertex_count();
  if (n == 1) return "()";
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = adj[v].size();
    if (deg[v] <= 1) leaves.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    std::vector<Vertex> next;
    remaining -= leaves.size();
    for (Vertex v : leaves)
      for (Vertex w : adj[v])
        if (--deg[w] == 1) next.push_back(w);
    leaves = next;
  }
  std::string best;
  for (Vertex c : leaves) {
    std::string code = ahu(adj, c, n);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

/// Tree isomorphism classes on n vertices from all n^(n-2) Pruefer codes.
inline std::set<std::string> pruefer_tree_classes(std::size_t n) {
  std::set<std::string> out;
  if (n <= 2) {
    out.insert(tree_code(n == 1 ? CombGraph(1, {}) : CombGraph(2, {{0, 1}})));
    return out;
  }
  std::vector<std::size_t> seq(n - 2, 0);
  while (true) {
    std::vector<std::size_t> degree(n, 1);
    for (auto x : seq) ++degree[x];
    std::vector<Edge> edges;
    for (auto x : seq) {
      for (Vertex leaf = 0; leaf < n; ++leaf) {
        if (degree[leaf] == 1) {
          edges.emplace_back(leaf, x);
          --degree[leaf];
          --degree[x];
          break;
        }
      }
    }
    std::vector<Vertex> last;
    for (Vertex v = 0; v < n; ++v)
      if (degree[v] == 1) last.push_back(v);
    edges.emplace_back(last[0], last[1]);
    out.insert(tree_code(CombGraph(n, edges)));
    std::size_t k = 0;
    while (k < seq.size() && ++seq[k] == n) seq[k++] = 0;
    if (k == seq.size()) break;
  }
  return out;
}

/// Random connected graph: random spanning tree plus edges with prob p.
inline CombGraph random_connected(std::mt19937& rng, std::size_t n, double p) {
  std::vector<Edge> edges;
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t k = 1; k < n; ++k) {
    std::uniform_int_distribution<std::size_t> pick(0, k - 1);
    edges.emplace_back(order[pick(rng)], order[k]);
  }
  std::bernoulli_distribution extra(p);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      const bool present = std::any_of(edges.begin(), edges.end(), [&](const Edge& e) {
        return (e.first == i && e.second == j) || (e.first == j && e.second == i);
      });
      if (!present && extra(rng)) edges.emplace_back(i, j);
    }
  return CombGraph(n, edges);
}

inline std::vector<Vertex> random_permutation(std::mt19937& rng, std::size_t n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline IntPoly random_poly(std::mt19937& rng, int max_degree, long bound) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coeff(rng);
  if (c.back() == 0) c.back() = 1;
  return IntPoly(std::move(c));
}

inline MultiPoly random_multi(std::mt19937& rng, int terms, unsigned max_exp, long bound) {
  std::uniform_int_distribution<unsigned> e(0, max_exp);
  std::uniform_int_distribution<long> coeff(-bound, bound);
  MultiPoly p;
  for (int k = 0; k < terms; ++k) p = p + MultiPoly::term(coeff(rng), {e(rng), e(rng), e(rng)});
  return p;
}

/// Leibniz-free cofactor determinant over Z[z] (exponential, small n).
inline IntPoly cofactor_det(const std::vector<std::vector<IntPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPoly::constant(1);
  if (n == 1) return m[0][0];
  IntPoly total;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<IntPoly>> minor(n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (j != col) minor[i - 1].push_back(m[i][j]);
    IntPoly term = m[0][col] * cofactor_det(minor);
    total = col % 2 == 0 ? total + term : total - term;
  }
  return total;
}

/// det(z D - A) by cofactor expansion, D from degrees in g.
inline IntPoly pencil_by_cofactors(const CombGraph& g, const VertexSet& removed) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!removed.contains(v)) keep.push_back(v);
  std::vector<std::vector<IntPoly>> m(keep.size(), std::vector<IntPoly>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if (i == j) m[i][j] = IntPoly::monomial(static_cast<unsigned long>(g.degree(keep[i])), 1);
      else if (g.adjacent(keep[i], keep[j])) m[i][j] = IntPoly::constant(-1);
    }
  return cofactor_det(m);
}

inline IntPoly from_desc(std::initializer_list<long> descending) {
  std::vector<BigInt> c(descending.begin(), descending.end());
  std::reverse(c.begin(), c.end());
  return IntPoly(std::move(c));
}

}  // namespace qgc::testing
