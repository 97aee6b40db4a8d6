// Acceptance run: one PASS/FAIL line per criterion, tolerances pinned below.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qgc/census.hpp"
#include "qgc/charfun.hpp"
#include "qgc/graph.hpp"
#include "qgc/scattering.hpp"
#include "qgc/sturm_liouville.hpp"

namespace {

using namespace qgc;
using cplx = std::complex<double>;
using testing::from_desc;
constexpr double kPi = std::numbers::pi;

constexpr double kSClosedFormTol = 1e-12;
constexpr double kUnitarityTol = 1e-10;
constexpr double kLowerHalfPlaneTol = 1e-9;
constexpr double kConjugationTol = 1e-8;
constexpr double kWronskianTol = 1e-8;
constexpr double kConstantPotentialTol = 1e-6;
constexpr double kRk4MinGain = 8.0;
constexpr double kSlopeS = -0.9;
constexpr double kInterlaceTol = 1e-9;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("mismatch: " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<void(Outcome&)> body;
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::vector<BigInt> degree_list(const CombGraph& g) {
  std::vector<BigInt> out;
  for (std::size_t d : g.degrees()) out.emplace_back(static_cast<unsigned long>(d));
  return out;
}

BigInt degree_product(const CombGraph& g) {
  BigInt p = 1;
  for (const BigInt& d : degree_list(g)) p *= d;
  return p;
}

IntPoly fig2_pencil() { return IntPoly{-1, 1} * pow(IntPoly{1, 4}, 3) * IntPoly{-1, 1, 4}; }

// A quoted polynomial against the computed forms: which computed form it
// matches (up to scalar), or -1.
int match_quoted(const IntPoly& quoted, int quoted_m, const std::vector<TrigForm>& computed) {
  const IntPoly target = primitive_part(quoted);
  for (std::size_t k = 0; k < computed.size(); ++k)
    if (computed[k].a == 0 && computed[k].m == quoted_m && computed[k].Q == target) return static_cast<int>(k);
  return -1;
}

bool pairwise_distinct(const std::vector<TrigForm>& forms) {
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = i + 1; j < forms.size(); ++j)
      if (trig_equal(forms[i], forms[j])) return false;
  return true;
}

struct Quoted {
  std::string tag;
  IntPoly poly;
  IntPoly corrected;  // equal to poly unless a typo is documented
  std::string erratum;
};

// Computed forms at every orbit representative, each confirmed by the
// characteristic-matrix determinant and by a cofactor expansion of the pencil.
std::vector<TrigForm> orbit_forms(const CombGraph& g, Outcome& out, const std::string& name) {
  std::vector<TrigForm> forms;
  for (Vertex v : vertex_orbits(g).representatives) {
    const VertexSet vs{v};
    const TrigForm f = phi_dirichlet(g, vs);
    out.check(trig_equal(f, char_matrix_oracle(g, vs)), name + " vertex " + std::to_string(v) + " vs char matrix");
    out.check(disc_char_poly(g, vs) == testing::pencil_by_cofactors(g, vs),
              name + " vertex " + std::to_string(v) + " vs cofactor pencil");
    forms.push_back(f);
  }
  return forms;
}

// Every quoted polynomial must match a computed form; a documented typo
// must fail verbatim, and its corrected value must match.
void compare_quoted(const std::vector<Quoted>& quoted, int m, const std::vector<TrigForm>& computed, Outcome& out) {
  std::vector<int> used(computed.size(), 0);
  for (const Quoted& q : quoted) {
    const int verbatim = match_quoted(q.poly, m, computed);
    if (q.erratum.empty()) {
      out.check(verbatim >= 0, q.tag + " " + to_string(q.poly) + " not reproduced");
      if (verbatim >= 0) ++used[verbatim];
      continue;
    }
    const int fixed = match_quoted(q.corrected, m, computed);
    out.check(verbatim < 0, q.tag + " erratum claimed but quoted value matches");
    out.check(fixed >= 0, q.tag + " corrected value " + to_string(q.corrected) + " not reproduced");
    if (fixed >= 0) ++used[fixed];
    out.note("ERRATUM " + q.tag + ": quoted " + to_string(q.poly) + ", computed " + to_string(q.corrected) + " (" +
             q.erratum + ")");
  }
  for (std::size_t k = 0; k < used.size(); ++k)
    out.check(used[k] == 1, "computed form " + to_string(computed[k]) + " matched " + std::to_string(used[k]) + " times");
}

void criterion1(Outcome& out) {
  const CombGraph left = fixture("fig2-left");
  const CombGraph right = fixture("fig2-right");
  const IntPoly pl = disc_char_poly(left);
  const IntPoly pr = disc_char_poly(right);
  out.check(primitive_part(pl) == primitive_part(pr), "primitive parts differ");
  out.check(primitive_part(pl) == primitive_part(fig2_pencil()), "primitive part is " + to_string(primitive_part(pl)));
  // Leading coefficient of det(zD - A) is the degree product.
  out.check(pl.leading() == degree_product(left), "left leading coefficient");
  out.check(pr.leading() == degree_product(right), "right leading coefficient");
  const BigRat predicted = make_rat(degree_product(right), degree_product(left));
  out.check(predicted == BigRat(3, 4), "degree-product ratio is " + to_decimal(predicted));
  out.check(pr * predicted.get_den() == pl * predicted.get_num(), "raw determinants not in ratio 3:4");
  out.note("P(fig2-left) = " + to_string(pl));
}

void criterion2(Outcome& out) {
  for (const char* name : {"fig2-left", "fig2-right"}) {
    const TrigForm f = phi_neumann(fixture(name));
    out.check(f.a == 0 && f.m == 4, std::string(name) + " exponents a=" + std::to_string(f.a) + " m=" + std::to_string(f.m));
    out.check(f.Q == primitive_part(fig2_pencil()), std::string(name) + " Q = " + to_string(f.Q));
  }
  out.note("phi_N = " + to_string(phi_neumann(fixture("fig2-left"))));
}

void criterion3(Outcome& out) {
  const std::vector<TrigForm> fb22_forms = orbit_forms(fixture("fig2-left"), out, "fig2-left");
  const std::vector<TrigForm> fb13_forms = orbit_forms(fixture("fig2-right"), out, "fig2-right");
  out.check(fb22_forms.size() == 2 && fb13_forms.size() == 4, "orbit counts");
  compare_quoted({{"fig2-left#1", from_desc({-512, 0, 320, 96, -2, -2}), {}, ""},
                  {"fig2-left#2", from_desc({-256, 0, 144, 24, -10, -2}), {}, ""}},
                 5, fb22_forms, out);
  compare_quoted({{"fig2-right#1", from_desc({-768, 0, 480, 192, 21, 0}), {}, ""},
                  {"fig2-right#2", from_desc({-256, 0, 160, 32, -9, -2}), {}, ""},
                  {"fig2-right#3", from_desc({-192, 0, 116, 14, -11, -2}), {}, ""},
                  {"fig2-right#4", from_desc({-192, 0, -84, 30, 3, 0}), from_desc({-192, 0, 84, 30, 3, 0}),
                   "sign of the cubic term; both determinant routes give +84"}},
                 5, fb13_forms, out);
  std::vector<TrigForm> all = fb22_forms;
  all.insert(all.end(), fb13_forms.begin(), fb13_forms.end());
  out.check(pairwise_distinct(all), "two of the six forms coincide");
}

void criterion4(Outcome& out) {
  const IntPoly quoted_p = IntPoly{0, 0, 0, -4} * IntPoly{-1, 0, 1} * IntPoly{-3, 0, 4} * IntPoly{-1, 0, 3};
  for (const char* name : {"fig5-left", "fig5-right"}) {
    const CombGraph t = fixture(name);
    const IntPoly p = disc_char_poly(t);
    out.check(primitive_part(p) == primitive_part(quoted_p), std::string(name) + " P = " + to_string(p));
    const TrigForm f = phi_neumann(t);
    out.check(f.a == 1 && f.m == 1, std::string(name) + " phi_N exponents");
    out.check(f.Q == primitive_part(IntPoly::monomial(4, 3) * IntPoly{-3, 0, 4} * IntPoly{-1, 0, 3}),
              std::string(name) + " phi_N Q = " + to_string(f.Q));
  }
  const std::vector<TrigForm> left = orbit_forms(fixture("fig5-left"), out, "fig5-left");
  const std::vector<TrigForm> right = orbit_forms(fixture("fig5-right"), out, "fig5-right");
  out.check(left.size() == 7 && right.size() == 7, "orbit counts");
  // Every tree pencil satisfies P_hat(1) = 1: each component of the interior
  // subgraph contributes a grounded Laplacian with determinant 1. Both
  // typos below violate it.
  const std::string unit_rule = "quoted value at z=1 is not 1; all tree pencils are";
  const std::string swap = "listed under the other tree";
  std::vector<Quoted> left_quoted{
      {"fig5-left#1", from_desc({48, 0, -88, 0, 49, 0, -8, 0, 0}), {}, ""},
      {"fig5-left#2", from_desc({48, 0, -84, 0, 40, 0, -3, 0, 0}), {}, ""},
      {"fig5-left#3", from_desc({12, 0, -15, 0, 4, 0, 0, 0, 0}), {}, ""},
      {"fig5-left#4", from_desc({16, 0, -24, 0, 9, 0, 0, 0, 0}), {}, ""},
      {"fig5-left#5", from_desc({24, 0, -40, 0, 20, 0, -3, 0, 0}), {}, ""},
      {"fig5-left#6", from_desc({24, 0, -35, 0, 12, 0, 0, 0, 0}), from_desc({24, 0, -32, 0, 9, 0, 0, 0, 0}), swap},
      {"fig5-left#7", from_desc({48, 0, -76, 0, 32, 0, -3, 0, 0}), {}, ""}};
  std::vector<Quoted> right_quoted{
      {"fig5-right#1", from_desc({48, 0, -76, 0, 19, 0, 0, 0, 0}), from_desc({48, 0, -76, 0, 29, 0, 0, 0, 0}), unit_rule},
      {"fig5-right#2", from_desc({16, 0, -20, 0, 5, 0, 0, 0, 0}), {}, ""},
      {"fig5-right#3", from_desc({24, 0, -13, 0, -8, 0, 4, 0, 0}), from_desc({24, 0, -43, 0, 24, 0, -4, 0, 0}), unit_rule},
      {"fig5-right#4", from_desc({48, 0, -88, 0, 48, 0, -7, 0, 0}), {}, ""},
      {"fig5-right#5", from_desc({12, 0, -16, 0, 5, 0, 0, 0, 0}), {}, ""},
      {"fig5-right#6", from_desc({24, 0, -32, 0, 9, 0, 0, 0, 0}), from_desc({24, 0, -35, 0, 12, 0, 0, 0, 0}), swap},
      {"fig5-right#7", from_desc({48, 0, -84, 0, 44, 0, -7, 0, 0}), {}, ""}};
  for (const auto* list : {&left_quoted, &right_quoted})
    for (const Quoted& q : *list)
      if (q.erratum == unit_rule) out.check(eval(q.poly, BigRat(1)) != 1 && eval(q.corrected, BigRat(1)) == 1, q.tag);
  // The swapped pair holds two genuine forms: each is verbatim on the other list.
  out.check(match_quoted(left_quoted[5].poly, 0, right) >= 0 && match_quoted(right_quoted[5].poly, 0, left) >= 0, "swap claim");
  compare_quoted(left_quoted, 0, left, out);
  compare_quoted(right_quoted, 0, right, out);
  // Tree forms keep the raw normalization: scale 1, the pencil itself.
  for (const auto* forms : {&left, &right})
    for (const TrigForm& f : *forms) out.check(f.scale == 1, "tree form scale " + to_decimal(f.scale));
  std::vector<TrigForm> all = left;
  all.insert(all.end(), right.begin(), right.end());
  out.check(pairwise_distinct(all), "two of the fourteen forms coincide");
}

void criterion5(Outcome& out) {
  struct Step {
    std::string name;
    std::vector<CombGraph> family;
    std::size_t pairs;
    const char* a;
    const char* b;
  };
  std::vector<Step> steps;
  steps.push_back({"graphs<=5", graph_family(5), 0, nullptr, nullptr});
  steps.push_back({"graphs<=6", graph_family(6), 1, "fig2-left", "fig2-right"});
  steps.push_back({"trees<=8", tree_family(8), 0, nullptr, nullptr});
  steps.push_back({"trees<=9", tree_family(9), 1, "fig5-left", "fig5-right"});
  for (const Step& s : steps) {
    const CensusReport r = run_census(s.family, s.name, 1);
    out.check(r.multi_member_classes() == s.pairs, s.name + " multi-member classes " + std::to_string(r.multi_member_classes()));
    out.check(r.classes.size() + s.pairs == r.graphs.size(), s.name + " class count");
    out.check(r.all_resolved(), s.name + " unresolved");
    out.note(s.name + ": " + std::to_string(r.graphs.size()) + " graphs, " + std::to_string(r.classes.size()) + " classes");
    if (s.pairs == 0) continue;
    for (const auto& c : r.classes) {
      if (c.members.size() < 2) continue;
      out.check(c.members.size() == 2, s.name + " class size");
      const CombGraph ca = canonical_form(fixture(s.a));
      const CombGraph cb = canonical_form(fixture(s.b));
      const CombGraph m0 = canonical_form(r.graphs[c.members[0]]);
      const CombGraph m1 = canonical_form(r.graphs[c.members[1]]);
      out.check((m0 == ca && m1 == cb) || (m0 == cb && m1 == ca), s.name + " pair is not the figure pair");
    }
  }
}

void criterion6(Outcome& out) {
  for (std::size_t n = 4; n <= 8; ++n) {
    const CensusReport r = fuzzy_ball_family(n, 1);
    const std::string tag = "n=" + std::to_string(n);
    out.check(r.graphs.size() == n / 2, tag + " member count");
    out.check(r.classes.size() == 1, tag + " not a single cospectral class");
    if (r.classes.empty()) continue;
    const Resolution& res = r.classes[0].resolution;
    for (const auto& row : res.table)
      for (const auto& a : row.attachments) out.check(a.vertex >= n, tag + " bulk vertex in off-bulk table");
    for (std::size_t i = 0; i < res.table.size(); ++i)
      for (std::size_t j = i + 1; j < res.table.size(); ++j)
        for (const auto& a : res.table[i].attachments)
          for (const auto& b : res.table[j].attachments)
            out.check(!trig_equal(a.phi_d, b.phi_d), tag + " off-bulk forms coincide");
    out.check(res.resolved, tag + " verdict");
    out.note(tag + ": " + std::to_string(r.graphs.size()) + " members resolved off-bulk; bulk forms " +
             (r.bulk_forms_coincide.value_or(false) ? "coincide" : "differ") + " across r");
  }
}

void criterion7(Outcome& out) {
  std::size_t configurations = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const CombGraph& g : enumerate_connected(n)) {
      out.check(trig_equal(char_matrix_oracle(g), phi_neumann(g)), "Neumann on " + std::to_string(n) + " vertices");
      ++configurations;
      for (Vertex v = 0; v < n; ++v) {
        const VertexSet vs{v};
        out.check(trig_equal(char_matrix_oracle(g, vs), phi_dirichlet(g, vs)),
                  "Dirichlet on " + std::to_string(n) + " vertices at " + std::to_string(v));
        ++configurations;
      }
    }
  }
  out.note(std::to_string(configurations) + " configurations compared");
}

void criterion8(Outcome& out) {
  const CombGraph k2 = complete_graph(2);
  const TrigForm n2 = phi_neumann(k2);
  const TrigForm d2 = phi_dirichlet(k2, VertexSet{0});
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double lambda = 0.01 + 0.5 * k;
    for (double ell : {1.0, 0.7}) {
      const cplx expected = -std::exp(cplx(0.0, 2.0 * std::sqrt(lambda) * ell));
      worst = std::max(worst, std::abs(s_eval(n2, d2, ell, lambda) - expected));
    }
  }
  out.check(worst <= kSClosedFormTol, "K2 closed form error " + fmt(worst));
  out.note("K2 worst error " + fmt(worst));

  const std::vector<CombGraph> family = graph_family(6);
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> pick(0, family.size() - 1);
  std::uniform_real_distribution<double> lam(0.05, 400.0);
  double worst_unit = 0.0;
  for (int k = 0; k < 20; ++k) {
    const CombGraph& g = family[pick(rng)];
    const Vertex lead = std::uniform_int_distribution<Vertex>(0, g.vertex_count() - 1)(rng);
    const double lambda = lam(rng);
    const cplx s = s_eval(phi_neumann(g), phi_dirichlet(g, VertexSet{lead}), 1.0, lambda);
    worst_unit = std::max(worst_unit, std::abs(std::abs(s) - 1.0));
  }
  out.check(worst_unit <= kUnitarityTol, "|S| - 1 reaches " + fmt(worst_unit));

  double worst_im = -1e300;
  double worst_mirror = 0.0;
  std::size_t total = 0;
  for (const CombGraph& g : family) {
    const TrigForm pn = phi_neumann(g);
    for (Vertex lead : vertex_orbits(g).representatives) {
      const ResonanceSet set = resonances(jost_form(pn, phi_dirichlet(g, VertexSet{lead})));
      for (const auto& r : set.roots) {
        ++total;
        worst_im = std::max(worst_im, r.omega.imag());
        double best = 1e300;
        for (const auto& o : set.roots) {
          const double dr = std::remainder(o.omega.real() + r.omega.real(), 2 * kPi);
          best = std::min(best, std::hypot(dr, o.omega.imag() - r.omega.imag()));
        }
        worst_mirror = std::max(worst_mirror, best);
      }
    }
  }
  out.check(worst_im <= kLowerHalfPlaneTol, "max Im omega " + fmt(worst_im));
  out.check(worst_mirror <= kConjugationTol, "conjugation symmetry off by " + fmt(worst_mirror));
  out.note(std::to_string(total) + " resonances over every lead position on <=6 vertices; max Im " + fmt(worst_im) +
           ", mirror error " + fmt(worst_mirror));
}

void criterion9(Outcome& out) {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst_w = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double a = 20 * unit(rng) - 10;
    const double b = 10 * unit(rng);
    const double ell = 0.5 + unit(rng);
    const PotentialSample q = sample_potential([&](double x) { return a * std::cos(5 * x) + b * x; }, ell, 256);
    const cplx lambda(300 * unit(rng) - 50, 20 * unit(rng) - 10);
    const Fundamental f = integrate_sc(q, lambda);
    worst_w = std::max(worst_w, std::abs(f.c * f.sp - f.cp * f.s - 1.0));
  }
  out.check(worst_w <= kWronskianTol, "Wronskian drift " + fmt(worst_w));

  double worst_c = 0.0;
  for (double v0 : {-5.0, 2.0, 9.0})
    for (double lambda : {0.5, 25.0, 180.0}) {
      const Fundamental f = integrate_sc(constant_potential(v0), lambda);
      const cplx k = std::sqrt(cplx(lambda - v0));
      worst_c = std::max({worst_c, std::abs(f.s - std::sin(k) / k), std::abs(f.c - std::cos(k))});
    }
  out.check(worst_c <= kConstantPotentialTol, "constant potential error " + fmt(worst_c));

  const cplx k(std::sqrt(150.0 - 2.0));
  double min_gain = 1e300;
  double previous = 0.0;
  for (int steps = 64; steps <= 1024; steps *= 2) {
    const Fundamental f = integrate_sc(constant_potential(2.0), 150.0, steps);
    const double err = std::abs(f.s - std::sin(k) / k) + std::abs(f.c - std::cos(k));
    if (steps > 64 && previous > 1e-11) min_gain = std::min(min_gain, previous / err);
    previous = err;
  }
  out.check(min_gain >= kRk4MinGain, "RK4 gain per doubling " + fmt(min_gain));

  const PotentialSample bump =
      sample_potential([](double x) { return 5.0 * std::exp(-std::pow(x - 0.5, 2) / 0.02); }, 1.0, 400);
  std::vector<double> lambdas;
  for (int e = 0; e <= 8; ++e) lambdas.push_back(100.0 * std::pow(10.0, e / 2.0));
  const CombGraph k2 = complete_graph(2);
  const AsymptoticReport r = asymptotic_check(bump, lambdas, &k2, 0);
  out.check(r.slope_s <= kSlopeS, "slope of |s_q - s| is " + fmt(r.slope_s));
  out.check(r.S_decreasing, "|S_q - S| not decreasing");
  out.note("slopes: s " + fmt(r.slope_s) + ", c " + fmt(r.slope_c) + ", S " + fmt(r.slope_S.value_or(NAN)) +
           "; Wronskian " + fmt(worst_w) + ", constant " + fmt(worst_c) + ", RK4 gain " + fmt(min_gain));
}

void criterion10(Outcome& out) {
  std::mt19937 rng(10);
  for (int k = 0; k < 10; ++k) {
    const CombGraph base = testing::random_connected(rng, 3 + k % 5, 0.4);
    const Vertex anchor = std::uniform_int_distribution<Vertex>(0, base.vertex_count() - 1)(rng);
    std::vector<Edge> edges = base.edges();
    const Vertex pendant = base.vertex_count();
    edges.emplace_back(anchor, pendant);
    const CombGraph g(pendant + 1, edges);
    const auto mu = spectrum_families(phi_neumann(g), 200.0).eigenvalues;
    const auto nu = spectrum_families(phi_dirichlet(g, VertexSet{pendant}), 200.0).eigenvalues;
    out.check(interlace(mu, nu, kInterlaceTol), "graph " + std::to_string(k) + ": " + std::to_string(mu.size()) +
                                                    " Neumann vs " + std::to_string(nu.size()) + " Dirichlet values");
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "fig-2 characteristic polynomial", 1.0, criterion1},
      {2, "fig-2 Neumann form", 1.0, criterion2},
      {3, "fig-2 lead forms", 5.0, criterion3},
      {4, "fig-5 tree forms", 5.0, criterion4},
      {5, "census counts", 60.0, criterion5},
      {6, "fuzzy balls", 30.0, criterion6},
      {7, "oracle equivalence", 300.0, criterion7},
      {8, "scattering", 60.0, criterion8},
      {9, "numerics", 120.0, criterion9},
      {10, "interlacing", 10.0, criterion10},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(out);
    } catch (const std::exception& e) {
      out.pass = false;
      out.notes.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      out.pass = false;
      out.notes.push_back("over budget: " + fmt(seconds) + " s > " + fmt(c.budget_seconds) + " s");
    }
    std::printf("%s criterion %d: %s (%.3f s)\n", out.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), seconds);
    for (const std::string& n : out.notes) std::printf("    %s\n", n.c_str());
    if (!out.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
