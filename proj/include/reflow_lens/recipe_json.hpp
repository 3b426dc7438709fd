#pragma once

// Recipe file format:
//   {"name": ..., "max_ramp_c_per_min"?: ...,
//    "steps": [{"kind": ..., "temperature_c"?, "duration_min"?, "ramp_from_c"?,
//               "spin_segments"?: [[rpm, seconds], ...]}]}
// Unknown keys are rejected with a FormatError naming the key.

#include <json.hpp>
#include <string>

#include "reflow_lens/recipe.hpp"

namespace reflow {

nlohmann::json recipe_to_json(const ProcessRecipe& recipe);
ProcessRecipe recipe_from_json(const nlohmann::json& doc);

ProcessRecipe parse_recipe(const std::string& text);
ProcessRecipe load_recipe(const std::string& path);

nlohmann::json report_to_json(const ValidationReport& report);

}  // namespace reflow
