#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tgwa/datum.hpp"
#include "tgwa/diagonal_aut.hpp"
#include "tgwa/expr.hpp"

namespace tgwa {

using json = nlohmann::json;

struct Scenario {
  std::string name;
  FieldPtr field;
  Params params;
  std::optional<TGWDatum> datum;
  std::optional<DiagonalAut> phi;
  json modules = json::array();
  std::vector<std::string> checks;
  json source;
};

Scenario parse_scenario(const std::string& text);
Scenario scenario_from_json(const json& j);

// Expression helpers bound to a scenario's field and params; errors carry the JSON path.
Scalar scenario_scalar(const Scenario& s, const json& v, const std::string& path);
BasePoly scenario_poly(const Scenario& s, const RingPtr& r, const json& v, const std::string& path);

TGWDatum parse_datum(const json& j, const FieldPtr& field, const Params& params);
DiagonalAut parse_phi(const json& j, const TGWDatum& d, const FieldPtr& field, const Params& params);
json datum_to_json(const TGWDatum& d);
json phi_to_json(const DiagonalAut& a);

std::vector<std::string> builtin_names();
// Overrides are raw parameter strings (structural ones like n or seed, or scalar params).
json builtin_scenario(const std::string& name, const std::map<std::string, std::string>& overrides = {});
Scenario load_builtin(const std::string& name, const std::map<std::string, std::string>& overrides = {});

}  // namespace tgwa
