#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "qgc/census.hpp"
#include "qgc/charfun.hpp"
#include "qgc/graph.hpp"
#include "qgc/int_poly.hpp"
#include "qgc/scattering.hpp"
#include "qgc/sturm_liouville.hpp"
#include "qgc/trig_form.hpp"

namespace qgc {

using json = nlohmann::ordered_json;

/// {"n": n, "edges": [[u, v], ...]} with sorted edges.
json to_json(const CombGraph& g);
/// Accepts the same shape; InvalidInput on anything else.
CombGraph graph_from_json(const json& j);
CombGraph load_graph(const std::string& path);

/// Ascending coefficients as decimal strings.
json to_json(const IntPoly& p);
IntPoly int_poly_from_json(const json& j);

/// {"a", "m", "Q", "scale"}; scale as "p/q" or "p".
json to_json(const TrigForm& f);
TrigForm trig_form_from_json(const json& j);

json to_json(const SpectrumFamilies& f);
json to_json(const EmbeddedEigenvalues& e);
json to_json(const AsymptoticReport& r);

/// Versioned census document ("schema": "qgc-census-1").
json to_json(const CensusReport& r);

}  // namespace qgc
