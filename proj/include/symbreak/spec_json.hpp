#pragma once

#include <string_view>

#include "json.hpp"
#include "symbreak/generators.hpp"

namespace symbreak::gen {

// {"kind": "...", "params": [...], "parts": [{<spec>, "x": sel, "y": sel}, ...]}
// where sel is a vertex index or a role name. Nanostar specs may carry "F" and
// "G1" graph objects in the graph JSON format to replace the default bases.
nlohmann::json spec_to_json(const FamilySpec& spec);
FamilySpec spec_from_json(const nlohmann::json& j);
FamilySpec parse_spec(std::string_view text);

}  // namespace symbreak::gen
