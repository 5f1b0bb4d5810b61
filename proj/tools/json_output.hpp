#pragma once

#include <nlohmann/json.hpp>

#include "eisenspec/eisenspec.hpp"

namespace eisenspec::cli {

using nlohmann::json;

json to_json(const IntPolynomial& p);
json to_json(const Inertia& in);
json to_json(const SwitchingFunction& x);
json to_json(const SwitchingIsomorphism& w);
json to_json(const ClassificationVerdict& v);
json to_json(const CensusReport& r);
json edges_to_json(const std::vector<Edge>& edges);

/// Key/value rendering of a payload for terminals.
std::string render_pretty(const json& payload);

}  // namespace eisenspec::cli
