// qgc: characteristic functions, scattering data and co-spectrality census
// for equilateral quantum graphs with one lead.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qgc/census.hpp"
#include "qgc/charfun.hpp"
#include "qgc/error.hpp"
#include "qgc/graph.hpp"
#include "qgc/scattering.hpp"
#include "qgc/serialize.hpp"
#include "qgc/sturm_liouville.hpp"

namespace {

using namespace qgc;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitInconsistent = 3;

// Oracle disagreement: the two routes to phi gave different forms.
struct ConsistencyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::string fixture;
  std::string path;

  CombGraph load() const {
    if (fixture.empty() == path.empty()) throw InvalidInput("give exactly one of --fixture or --graph");
    return fixture.empty() ? load_graph(path) : qgc::fixture(fixture);
  }
};

void add_graph_options(CLI::App* cmd, GraphSource& src) {
  cmd->add_option("--fixture", src.fixture, "Named graph: fig2-left, fig2-right, fig5-left, fig5-right");
  cmd->add_option("--graph", src.path, "Graph JSON file {\"n\": V, \"edges\": [[u, v], ...]}");
}

Vertex checked_vertex(const CombGraph& g, long v, const char* what) {
  if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count()) {
    throw InvalidInput(std::string(what) + " " + std::to_string(v) + " is not a vertex of a " +
                       std::to_string(g.vertex_count()) + "-vertex graph");
  }
  return static_cast<Vertex>(v);
}

void verify_by_oracle(const CombGraph& g, const VertexSet& vstar, const TrigForm& f) {
  const TrigForm o = char_matrix_oracle(g, vstar);
  if (!trig_equal(o, f)) {
    throw ConsistencyFailure("oracle mismatch: product form " + to_string(f) + ", characteristic matrix " +
                             to_string(o));
  }
}

// Writes to --out when given, else standard output.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InvalidInput("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  bool to_stdout() const { return !file_.is_open(); }

 private:
  std::ofstream file_;
};

std::string num(double x) {
  if (x == 0.0) x = 0.0;  // no negative zero in output
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

struct CharfunArgs {
  GraphSource src;
  std::string problem = "neumann";
  std::vector<long> vstar;
  double lambda_max = 100.0;
  double ell = 1.0;
  bool oracle = false;
  std::string out;
};

int cmd_charfun(const CharfunArgs& a) {
  const CombGraph g = a.src.load();
  VertexSet vs;
  if (a.problem == "dirichlet") {
    if (a.vstar.empty()) throw InvalidInput("--problem dirichlet needs --vstar");
    std::vector<Vertex> members;
    for (long v : a.vstar) members.push_back(checked_vertex(g, v, "--vstar"));
    vs = VertexSet(members);
  } else if (a.problem != "neumann") {
    throw InvalidInput("--problem must be neumann or dirichlet");
  } else if (!a.vstar.empty()) {
    throw InvalidInput("--vstar only applies to --problem dirichlet");
  }
  if (!(a.ell > 0.0)) throw InvalidInput("--ell must be positive");
  if (a.lambda_max < 0.0) throw InvalidInput("--lambda-max must be nonnegative");

  const TrigForm f = a.problem == "neumann" ? phi_neumann(g) : phi_dirichlet(g, vs);
  if (a.oracle) verify_by_oracle(g, vs, f);

  json j;
  j["graph"] = to_json(g);
  j["problem"] = a.problem;
  j["vstar"] = vs.members();
  j["ell"] = a.ell;
  j["P"] = to_json(disc_char_poly(g, vs));
  j["phi"] = to_json(f);
  j["phi_text"] = to_string(f);
  j["spectrum"] = to_json(spectrum_families(f, a.lambda_max, a.ell));
  if (a.oracle) j["oracle"] = "agrees";
  Sink sink(a.out);
  sink.stream() << j.dump(2) << '\n';
  return kExitOk;
}

struct CensusArgs {
  std::string family;
  std::size_t max_vertices = 0;
  std::size_t n = 0;
  unsigned threads = 0;
  bool oracle = false;
  std::string out;
};

int cmd_census(const CensusArgs& a) {
  const unsigned threads = a.threads > 0 ? a.threads : default_threads();
  CensusReport report;
  if (a.family == "graphs") {
    if (a.max_vertices == 0) throw InvalidInput("--family graphs needs --max-vertices");
    report = run_census(graph_family(a.max_vertices), "graphs<=" + std::to_string(a.max_vertices), threads);
  } else if (a.family == "trees") {
    if (a.max_vertices == 0) throw InvalidInput("--family trees needs --max-vertices");
    report = run_census(tree_family(a.max_vertices), "trees<=" + std::to_string(a.max_vertices), threads);
  } else if (a.family == "fuzzyballs") {
    if (a.n == 0) throw InvalidInput("--family fuzzyballs needs --n");
    report = fuzzy_ball_family(a.n, threads);
  } else {
    throw InvalidInput("--family must be graphs, trees or fuzzyballs");
  }

  if (a.oracle) {
    for (const CensusClass& c : report.classes) {
      for (std::size_t m : c.members) verify_by_oracle(report.graphs[m], {}, c.phi_n);
      for (const MemberResolution& row : c.resolution.table)
        for (const Attachment& at : row.attachments)
          verify_by_oracle(report.graphs[row.member], VertexSet{at.vertex}, at.phi_d);
    }
  }

  Sink sink(a.out);
  sink.stream() << to_json(report).dump(2) << '\n';
  std::ostream& log = sink.to_stdout() ? std::cerr : std::cout;
  log << report.family << ": " << report.graphs.size() << " graphs, " << report.classes.size() << " classes, "
      << report.multi_member_classes() << " co-spectral, " << (report.all_resolved() ? "resolved" : "unresolved");
  if (report.bulk_forms_coincide) {
    log << ", bulk attachments " << (*report.bulk_forms_coincide ? "coincide" : "differ");
  }
  if (a.oracle) log << ", oracle agrees";
  log << '\n';
  return kExitOk;
}

struct LeadArgs {
  GraphSource src;
  long lead = -1;
  double ell = 1.0;
  bool oracle = false;
  std::string out;
};

struct LeadSetup {
  CombGraph g;
  Vertex lead = 0;
  TrigForm phi_n;
  TrigForm phi_d;
};

LeadSetup prepare_lead(const LeadArgs& a) {
  LeadSetup s;
  s.g = a.src.load();
  if (a.lead < 0) throw InvalidInput("--lead is required");
  s.lead = checked_vertex(s.g, a.lead, "--lead");
  if (!(a.ell > 0.0)) throw InvalidInput("--ell must be positive");
  s.phi_n = phi_neumann(s.g);
  s.phi_d = phi_dirichlet(s.g, VertexSet{s.lead});
  if (a.oracle) {
    verify_by_oracle(s.g, {}, s.phi_n);
    verify_by_oracle(s.g, VertexSet{s.lead}, s.phi_d);
  }
  return s;
}

struct ScatterArgs {
  LeadArgs lead;
  double lmin = 0.1;
  double lmax = 100.0;
  int samples = 200;
};

int cmd_scatter(const ScatterArgs& a) {
  const LeadSetup s = prepare_lead(a.lead);
  if (!(a.lmin > 0.0) || !(a.lmax >= a.lmin)) throw InvalidInput("need 0 < --lmin <= --lmax");
  if (a.samples < 1) throw InvalidInput("--samples must be positive");
  Sink sink(a.lead.out);
  std::ostream& out = sink.stream();
  out << "lambda,re_S,im_S,abs_S\n";
  for (int k = 0; k < a.samples; ++k) {
    const double lambda = a.samples == 1 ? a.lmin : a.lmin + (a.lmax - a.lmin) * k / (a.samples - 1);
    const std::complex<double> S = s_eval(s.phi_n, s.phi_d, a.lead.ell, lambda);
    out << num(lambda) << ',' << num(S.real()) << ',' << num(S.imag()) << ',' << num(std::abs(S)) << '\n';
  }
  return kExitOk;
}

struct ResonanceArgs {
  LeadArgs lead;
  double tol = 1e-12;
};

int cmd_resonances(const ResonanceArgs& a) {
  const LeadSetup s = prepare_lead(a.lead);
  if (!(a.tol > 0.0)) throw InvalidInput("--tol must be positive");
  const ResonanceSet set = resonances(jost_form(s.phi_n, s.phi_d, a.lead.ell), a.tol);
  Sink sink(a.lead.out);
  std::ostream& out = sink.stream();
  out << "re_omega,im_omega,multiplicity\n";
  for (const Resonance& r : set.roots) {
    out << num(r.omega.real()) << ',' << num(r.omega.imag()) << ',' << r.multiplicity << '\n';
  }
  return kExitOk;
}

struct SlArgs {
  std::string potential;
  GraphSource src;
  long lead = -1;
  double lmin = 100.0;
  double lmax = 1e6;
  int samples = 9;
  bool oracle = false;
  std::string out;
};

int cmd_sl(const SlArgs& a) {
  if (a.potential.empty()) throw InvalidInput("--potential is required");
  const PotentialSample q = load_potential_csv(a.potential);
  if (!(a.lmin >= 10.0) || !(a.lmax >= a.lmin)) throw InvalidInput("need 10 <= --lmin <= --lmax");
  if (a.samples < 2) throw InvalidInput("--samples must be at least 2");
  std::vector<double> lambdas;
  for (int k = 0; k < a.samples; ++k) {
    lambdas.push_back(a.lmin * std::pow(a.lmax / a.lmin, static_cast<double>(k) / (a.samples - 1)));
  }
  std::optional<CombGraph> g;
  Vertex lead = 0;
  const bool has_graph = !a.src.fixture.empty() || !a.src.path.empty();
  if (has_graph) {
    g = a.src.load();
    if (a.lead < 0) throw InvalidInput("--lead is required with a graph");
    lead = checked_vertex(*g, a.lead, "--lead");
    if (!q.symmetric) throw InvalidInput("S_q needs a potential symmetric about the edge midpoint");
    if (a.oracle) {
      verify_by_oracle(*g, {}, phi_neumann(*g));
      verify_by_oracle(*g, VertexSet{lead}, phi_dirichlet(*g, VertexSet{lead}));
    }
  }
  const AsymptoticReport r = asymptotic_check(q, lambdas, g ? &*g : nullptr, lead);
  json j;
  j["potential"] = {{"path", a.potential}, {"ell", q.ell}, {"samples", q.values.size()}, {"symmetric", q.symmetric}};
  if (g) j["graph"] = to_json(*g), j["lead"] = lead;
  j["report"] = to_json(r);
  Sink sink(a.out);
  sink.stream() << j.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characteristic functions, scattering data and co-spectrality census for quantum graphs"};
  app.require_subcommand(1);

  CharfunArgs charfun;
  auto* c = app.add_subcommand("charfun", "Exact characteristic function and spectrum families");
  add_graph_options(c, charfun.src);
  c->add_option("--problem", charfun.problem, "neumann or dirichlet")->capture_default_str();
  c->add_option("--vstar", charfun.vstar, "Dirichlet vertices");
  c->add_option("--lambda-max", charfun.lambda_max, "List eigenvalues up to this value")->capture_default_str();
  c->add_option("--ell", charfun.ell, "Edge length")->capture_default_str();
  c->add_flag("--oracle", charfun.oracle, "Cross-check against the characteristic matrix determinant");
  c->add_option("--out", charfun.out, "Output JSON file");

  CensusArgs census;
  auto* cs = app.add_subcommand("census", "Co-spectrality census with lead resolution");
  cs->add_option("--family", census.family, "graphs, trees or fuzzyballs")->required();
  cs->add_option("--max-vertices", census.max_vertices, "Largest member size (graphs, trees)");
  cs->add_option("--n", census.n, "Fuzzy ball size r + s");
  cs->add_option("--threads", census.threads, "Worker count (default: QGC_THREADS or hardware)");
  cs->add_flag("--oracle", census.oracle, "Cross-check every form against the characteristic matrix");
  cs->add_option("--out", census.out, "Output JSON file");

  auto add_lead_options = [](CLI::App* cmd, LeadArgs& l) {
    add_graph_options(cmd, l.src);
    cmd->add_option("--lead", l.lead, "Vertex carrying the lead")->required();
    cmd->add_option("--ell", l.ell, "Edge length")->capture_default_str();
    cmd->add_flag("--oracle", l.oracle, "Cross-check against the characteristic matrix determinant");
    cmd->add_option("--out", l.out, "Output CSV file");
  };

  ScatterArgs scatter;
  auto* sc = app.add_subcommand("scatter", "S-function on a lambda grid (CSV)");
  add_lead_options(sc, scatter.lead);
  sc->add_option("--lmin", scatter.lmin, "Smallest lambda")->capture_default_str();
  sc->add_option("--lmax", scatter.lmax, "Largest lambda")->capture_default_str();
  sc->add_option("--samples", scatter.samples, "Grid points")->capture_default_str();

  ResonanceArgs reson;
  auto* rs = app.add_subcommand("resonances", "Poles of S in one period strip (CSV)");
  add_lead_options(rs, reson.lead);
  rs->add_option("--tol", reson.tol, "Root-finder tolerance")->capture_default_str();

  SlArgs sl;
  auto* sp = app.add_subcommand("sl", "Decay of perturbed against free data for an edge potential");
  sp->add_option("--potential", sl.potential, "CSV of x,q(x) on a uniform grid")->required();
  add_graph_options(sp, sl.src);
  sp->add_option("--lead", sl.lead, "Lead vertex, to include S");
  sp->add_option("--lmin", sl.lmin, "Smallest lambda")->capture_default_str();
  sp->add_option("--lmax", sl.lmax, "Largest lambda")->capture_default_str();
  sp->add_option("--samples", sl.samples, "Log-spaced lambda count")->capture_default_str();
  sp->add_flag("--oracle", sl.oracle, "Cross-check the graph forms against the characteristic matrix");
  sp->add_option("--out", sl.out, "Output JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*c) return cmd_charfun(charfun);
    if (*cs) return cmd_census(census);
    if (*sc) return cmd_scatter(scatter);
    if (*rs) return cmd_resonances(reson);
    if (*sp) return cmd_sl(sl);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const StructuralError& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return kExitInconsistent;
  } catch (const ConsistencyFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInconsistent;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitInconsistent;
  }
  return kExitInvalid;
}
