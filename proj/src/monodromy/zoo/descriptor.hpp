#pragma once

#include "json.hpp"
#include "monodromy/continuation/element.hpp"

namespace monodromy::zoo {

nlohmann::json complex_to_json(cplx z);
cplx complex_from_json(const nlohmann::json& j);

// {"family": ..., "parameters": {...}}
nlohmann::json describe(const continuation::AnalyticElement& e);
continuation::ElementPtr element_from_json(const nlohmann::json& j);

}  // namespace monodromy::zoo
