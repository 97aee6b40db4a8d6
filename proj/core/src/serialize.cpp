#include "qgc/serialize.hpp"

#include <fstream>

#include "qgc/error.hpp"

namespace qgc {
namespace {

json attachment_json(const Attachment& a) {
  json j;
  j["vertex"] = a.vertex;
  j["orbit_size"] = a.orbit_size;
  j["phi_D"] = to_json(a.phi_d);
  j["s_exponent"] = a.s_exponent;
  j["degree_rule_exponent"] = a.degree_rule_exponent;
  j["exponent_rules_agree"] = a.s_exponent == a.degree_rule_exponent;
  return j;
}

json member_json(const MemberResolution& m, const CensusReport& r) {
  json j;
  j["member"] = m.member;
  j["label"] = r.labels.at(m.member);
  j["attachments"] = json::array();
  for (const auto& a : m.attachments) j["attachments"].push_back(attachment_json(a));
  return j;
}

}  // namespace

json to_json(const CombGraph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.vertex_count()}, {"edges", edges}};
}

CombGraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw InvalidInput("graph JSON needs keys \"n\" and \"edges\"");
  }
  if (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() < 1) {
    throw InvalidInput("graph JSON: \"n\" must be a positive integer");
  }
  if (!j["edges"].is_array()) throw InvalidInput("graph JSON: \"edges\" must be an array");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
      throw InvalidInput("graph JSON: each edge must be a pair of nonnegative integers");
    }
    edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  return CombGraph(j["n"].get<std::size_t>(), std::move(edges));
}

CombGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open graph file '" + path + "'");
  try {
    return graph_from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw InvalidInput("graph file '" + path + "': " + e.what());
  }
}

json to_json(const IntPoly& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_decimal(c));
  return out;
}

IntPoly int_poly_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("polynomial JSON must be an array");
  std::vector<BigInt> coeffs;
  for (const auto& c : j) {
    if (c.is_string()) {
      coeffs.push_back(parse_bigint(c.get<std::string>()));
    } else if (c.is_number_integer()) {
      coeffs.emplace_back(c.get<long>());
    } else {
      throw InvalidInput("polynomial JSON: coefficients must be integers or decimal strings");
    }
  }
  return IntPoly(std::move(coeffs));
}

json to_json(const TrigForm& f) {
  return {{"a", f.a}, {"m", f.m}, {"Q", to_json(f.Q)}, {"scale", to_decimal(f.scale)}};
}

TrigForm trig_form_from_json(const json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("m") || !j.contains("Q")) {
    throw InvalidInput("TrigForm JSON needs \"a\", \"m\" and \"Q\"");
  }
  TrigForm f;
  f.a = j["a"].get<int>();
  f.m = j["m"].get<int>();
  f.Q = int_poly_from_json(j["Q"]);
  if (j.contains("scale")) f.scale = parse_bigrat(j["scale"].get<std::string>());
  return f;
}

json to_json(const SpectrumFamilies& f) {
  auto roots = [](const std::vector<CosRoot>& rs) {
    json out = json::array();
    for (const auto& r : rs) out.push_back({{"rho", r.rho}, {"multiplicity", r.multiplicity}});
    return out;
  };
  json j;
  j["has_zero"] = f.has_zero;
  j["sin_family"] = f.sin_family;
  j["cos_roots"] = roots(f.cos_roots);
  j["anomalies"] = roots(f.anomalies);
  j["ell"] = f.ell;
  j["lambda_max"] = f.lambda_max;
  j["eigenvalues"] = f.eigenvalues;
  return j;
}

json to_json(const EmbeddedEigenvalues& e) {
  return {{"sin_family", e.sin_family}, {"gcd_roots", e.gcd_roots}, {"values", e.values}};
}

json to_json(const AsymptoticReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"lambda", row.lambda}, {"err_s", row.err_s}, {"err_c", row.err_c}, {"err_S", row.err_S}});
  }
  json j;
  j["rows"] = rows;
  j["slope_s"] = r.slope_s;
  j["slope_c"] = r.slope_c;
  if (r.slope_S) {
    j["slope_S"] = *r.slope_S;
    j["S_decreasing"] = r.S_decreasing;
  }
  return j;
}

json to_json(const CensusReport& r) {
  json j;
  j["schema"] = "qgc-census-1";
  j["family"] = r.family;
  j["graph_count"] = r.graphs.size();
  j["class_count"] = r.classes.size();
  j["multi_member_classes"] = r.multi_member_classes();
  j["verdict"] = r.all_resolved() ? "resolved" : "unresolved";
  json graphs = json::array();
  for (std::size_t i = 0; i < r.graphs.size(); ++i) {
    json g = to_json(r.graphs[i]);
    g["id"] = i;
    g["label"] = r.labels.at(i);
    graphs.push_back(std::move(g));
  }
  j["graphs"] = std::move(graphs);
  json classes = json::array();
  for (const auto& c : r.classes) {
    json cj;
    cj["phi_N"] = to_json(c.phi_n);
    cj["members"] = c.members;
    if (c.members.size() > 1) {
      json table = json::array();
      for (const auto& m : c.resolution.table) table.push_back(member_json(m, r));
      cj["resolution"] = std::move(table);
      cj["verdict"] = c.resolution.resolved ? "resolved" : "unresolved";
      if (c.resolution.witness) {
        const Witness& w = *c.resolution.witness;
        cj["witness"] = {{"member_a", w.member_a}, {"vertex_a", w.vertex_a},
                         {"member_b", w.member_b}, {"vertex_b", w.vertex_b}};
      }
    }
    classes.push_back(std::move(cj));
  }
  j["classes"] = std::move(classes);
  if (!r.bulk.empty()) {
    json bulk = json::array();
    for (const auto& m : r.bulk) bulk.push_back(member_json(m, r));
    j["bulk_attachments"] = std::move(bulk);
    if (r.bulk_forms_coincide) j["bulk_forms_coincide"] = *r.bulk_forms_coincide;
  }
  return j;
}

}  // namespace qgc
