#pragma once

#include <json.hpp>

#include "gsat/classifier.hpp"
#include "gsat/instance.hpp"
#include "gsat/normal_forms.hpp"

namespace gsat {

using json = nlohmann::json;  // std::map-backed: emitted keys come out sorted

json to_json(const KType& t);
json to_json(const TypeTable& T);
json to_json(const Model& m);
json to_json(const SolveResult& r);
json to_json(const Classification& c);
json to_json(const BehaviorTable& b);
json to_json(const EdgeAffineClause& c);
json to_json(const BijunctiveClause& c);

Instance instance_from_json(const json& j);
Model model_from_json(const json& j);

} // namespace gsat
