#include "qgc/census.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "qgc/charfun.hpp"
#include "qgc/error.hpp"

namespace qgc {
namespace {

Attachment attach(const CombGraph& g, Vertex v, std::size_t orbit_size) {
  Attachment a;
  a.vertex = v;
  a.orbit_size = orbit_size;
  a.phi_d = phi_dirichlet(g, VertexSet{v});
  const int base = static_cast<int>(g.edge_count()) - static_cast<int>(g.vertex_count());
  a.s_exponent = base + 1;
  a.degree_rule_exponent = base + static_cast<int>(g.degree(v));
  return a;
}

MemberResolution orbit_attachments(const std::vector<CombGraph>& graphs, std::size_t member) {
  const CombGraph& g = graphs[member];
  const OrbitPartition orbits = vertex_orbits(g);
  std::vector<std::size_t> sizes(orbits.orbit_count(), 0);
  for (std::size_t id : orbits.orbit_of) ++sizes[id];
  MemberResolution out{member, {}};
  for (std::size_t k = 0; k < orbits.orbit_count(); ++k) {
    out.attachments.push_back(attach(g, orbits.representatives[k], sizes[k]));
  }
  return out;
}

}  // namespace

std::size_t CensusReport::multi_member_classes() const {
  return static_cast<std::size_t>(
      std::count_if(classes.begin(), classes.end(), [](const CensusClass& c) { return c.members.size() > 1; }));
}

bool CensusReport::all_resolved() const {
  return std::all_of(classes.begin(), classes.end(), [](const CensusClass& c) { return c.resolution.resolved; });
}

unsigned default_threads() {
  if (const char* env = std::getenv("QGC_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(1U, threads), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<CombGraph> graph_family(std::size_t max_vertices) {
  if (max_vertices < 2 || max_vertices > 7) throw InvalidInput("graph census supports 2..7 vertices");
  std::vector<CombGraph> out;
  for (std::size_t n = 2; n <= max_vertices; ++n) {
    for (auto& g : enumerate_connected(n)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<CombGraph> tree_family(std::size_t max_vertices) {
  if (max_vertices < 2 || max_vertices > 10) throw InvalidInput("tree census supports 2..10 vertices");
  std::vector<CombGraph> out;
  for (std::size_t n = 2; n <= max_vertices; ++n) {
    for (auto& g : enumerate_trees(n)) out.push_back(std::move(g));
  }
  return out;
}

CensusReport cospectral_classes(const std::vector<CombGraph>& family, std::string descriptor, unsigned threads) {
  CensusReport report;
  report.family = std::move(descriptor);
  report.graphs = family;
  for (std::size_t i = 0; i < family.size(); ++i) {
    report.labels.push_back("V" + std::to_string(family[i].vertex_count()) + "E" +
                            std::to_string(family[i].edge_count()) + "#" + std::to_string(i));
  }
  std::vector<TrigForm> forms(family.size());
  parallel_for(family.size(), threads, [&](std::size_t i) { forms[i] = phi_neumann(family[i]); });

  std::vector<std::size_t> order(family.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return trig_less(forms[x], forms[y]); });
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t i = order[k];
    if (report.classes.empty() || !trig_equal(report.classes.back().phi_n, forms[i])) {
      report.classes.push_back({forms[i], {}, {}});
    }
    report.classes.back().members.push_back(i);
  }
  for (auto& c : report.classes) std::sort(c.members.begin(), c.members.end());
  return report;
}

Resolution judge(std::vector<MemberResolution> table) {
  Resolution out;
  out.table = std::move(table);
  for (std::size_t x = 0; x < out.table.size() && out.resolved; ++x) {
    for (std::size_t y = x + 1; y < out.table.size() && out.resolved; ++y) {
      for (const auto& a : out.table[x].attachments) {
        const auto hit = std::find_if(out.table[y].attachments.begin(), out.table[y].attachments.end(),
                                      [&](const Attachment& b) { return trig_equal(a.phi_d, b.phi_d); });
        if (hit != out.table[y].attachments.end()) {
          out.resolved = false;
          out.witness = Witness{out.table[x].member, a.vertex, out.table[y].member, hit->vertex};
          break;
        }
      }
    }
  }
  return out;
}

Resolution resolve_by_lead(const std::vector<CombGraph>& graphs, const std::vector<std::size_t>& members,
                           unsigned threads) {
  std::vector<MemberResolution> table(members.size());
  parallel_for(members.size(), threads,
               [&](std::size_t k) { table[k] = orbit_attachments(graphs, members[k]); });
  return judge(std::move(table));
}

CensusReport run_census(const std::vector<CombGraph>& family, std::string descriptor, unsigned threads) {
  CensusReport report = cospectral_classes(family, std::move(descriptor), threads);
  for (auto& c : report.classes) {
    if (c.members.size() > 1) c.resolution = resolve_by_lead(report.graphs, c.members, threads);
  }
  return report;
}

CensusReport fuzzy_ball_family(std::size_t n, unsigned threads) {
  if (n < 4 || n > 8) throw InvalidInput("fuzzy-ball census supports 4 <= n <= 8");
  CensusReport report;
  report.family = "fuzzyballs n=" + std::to_string(n);
  for (std::size_t r = 1; r <= n / 2; ++r) {
    report.graphs.push_back(fuzzy_ball(r, n - r));
    report.labels.push_back("FB(" + std::to_string(r) + "," + std::to_string(n - r) + ")");
  }
  const std::size_t count = report.graphs.size();
  std::vector<TrigForm> forms(count);
  std::vector<MemberResolution> off_bulk(count);
  std::vector<MemberResolution> bulk(count);
  parallel_for(count, threads, [&](std::size_t i) {
    const CombGraph& g = report.graphs[i];
    const std::size_t r = i + 1;
    forms[i] = phi_neumann(g);
    off_bulk[i] = {i, {attach(g, n, 1), attach(g, n + 1, 1)}};
    bulk[i] = {i, {attach(g, 0, r), attach(g, r, n - r)}};
  });

  // Group exactly as cospectral_classes does.
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return trig_less(forms[x], forms[y]); });
  for (std::size_t i : order) {
    if (report.classes.empty() || !trig_equal(report.classes.back().phi_n, forms[i])) {
      report.classes.push_back({forms[i], {}, {}});
    }
    report.classes.back().members.push_back(i);
  }
  for (auto& c : report.classes) {
    std::sort(c.members.begin(), c.members.end());
    if (c.members.size() > 1) {
      std::vector<MemberResolution> table;
      for (std::size_t i : c.members) table.push_back(off_bulk[i]);
      c.resolution = judge(std::move(table));
    }
  }

  report.bulk = bulk;
  bool coincide = true;
  for (std::size_t i = 1; i < count && coincide; ++i) {
    for (const auto& a : bulk[i].attachments) {
      const bool found = std::any_of(bulk[0].attachments.begin(), bulk[0].attachments.end(),
                                     [&](const Attachment& b) { return trig_equal(a.phi_d, b.phi_d); });
      if (!found) {
        coincide = false;
        break;
      }
    }
  }
  report.bulk_forms_coincide = coincide;
  return report;
}

}  // namespace qgc
