#pragma once

#include <json.hpp>

#include "braidaug/filling.hpp"

namespace braidaug {

using Json = nlohmann::ordered_json;

Json word_to_json(const BraidWord& w);
BraidWord word_from_json(const Json& j);

Json plan_to_json(const Plan& plan);
Plan plan_from_json(const Json& j);

Json seed_to_json(const Seed& s);
Seed seed_from_json(const Json& j);

std::string quiver_to_dot(const Quiver& q);

// "p1 p4 p7 t1 = 1" with curve factors first, then the marker.
std::string relation_to_string(const TorusRelation& rel);

Json dga_to_json(const BraidWord& w);
Json aug_to_json(const BraidWord& w);
Json filling_to_json(const BraidWord& w, const FillingResult& result);

}  // namespace braidaug
