#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qgc/graph.hpp"
#include "qgc/trig_form.hpp"

namespace qgc {

/// A lead attached at `vertex` (the lowest vertex of its orbit).
struct Attachment {
  Vertex vertex = 0;
  std::size_t orbit_size = 1;
  TrigForm phi_d;
  /// Raw s-exponent E - V + 1 of the Dirichlet function, before
  /// canonicalization.
  int s_exponent = 0;
  /// E - V + deg(vertex): the alternative exponent rule sometimes quoted for
  /// fuzzy balls. Differs from s_exponent unless the vertex is pendant.
  int degree_rule_exponent = 0;
};

struct MemberResolution {
  std::size_t member = 0;  // index into CensusReport::graphs
  std::vector<Attachment> attachments;
};

/// Two attachments on different members with equal canonical phi_D.
struct Witness {
  std::size_t member_a = 0;
  Vertex vertex_a = 0;
  std::size_t member_b = 0;
  Vertex vertex_b = 0;
};

struct Resolution {
  std::vector<MemberResolution> table;
  bool resolved = true;
  std::optional<Witness> witness;
};

struct CensusClass {
  TrigForm phi_n;
  std::vector<std::size_t> members;  // ascending
  Resolution resolution;             // table empty for singletons
};

struct CensusReport {
  std::string family;
  std::vector<CombGraph> graphs;
  std::vector<std::string> labels;
  std::vector<CensusClass> classes;  // ordered by canonical phi_N
  /// Fuzzy balls only: bulk-vertex attachments, reported without a verdict.
  std::vector<MemberResolution> bulk;
  std::optional<bool> bulk_forms_coincide;

  std::size_t multi_member_classes() const;
  bool all_resolved() const;
};

/// QGC_THREADS if set to a positive integer, else the hardware concurrency.
unsigned default_threads();

/// Runs fn(0..count-1) on up to `threads` workers. Results land by index,
/// so the outcome does not depend on scheduling. The first exception thrown
/// by any task is rethrown.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

/// Connected graphs on 2..max_vertices vertices (max 7), grouped by size.
/// K1 has no edges and no characteristic function, so it is left out.
std::vector<CombGraph> graph_family(std::size_t max_vertices);

/// Trees on 2..max_vertices vertices (max 10).
std::vector<CombGraph> tree_family(std::size_t max_vertices);

/// Groups the family by canonical phi_N. Resolution tables are left empty.
CensusReport cospectral_classes(const std::vector<CombGraph>& family, std::string descriptor,
                                unsigned threads = 1);

/// phi_D at one representative per vertex orbit of each member; resolved iff
/// no form of one member equals a form of a different member.
Resolution resolve_by_lead(const std::vector<CombGraph>& graphs, const std::vector<std::size_t>& members,
                           unsigned threads = 1);

/// Same verdict rule on a precomputed table.
Resolution judge(std::vector<MemberResolution> table);

/// cospectral_classes followed by resolve_by_lead on every multi-member
/// class.
CensusReport run_census(const std::vector<CombGraph>& family, std::string descriptor, unsigned threads = 1);

/// FB(r, n - r) for r = 1..n/2 (4 <= n <= 8). Resolution uses the two
/// off-bulk vertices only; bulk attachments go to CensusReport::bulk.
CensusReport fuzzy_ball_family(std::size_t n, unsigned threads = 1);

}  // namespace qgc
