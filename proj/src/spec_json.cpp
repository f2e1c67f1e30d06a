#include "symbreak/spec_json.hpp"

#include "symbreak/error.hpp"
#include "symbreak/graph_io.hpp"

namespace symbreak::gen {

using nlohmann::json;

namespace {

json selector_to_json(const Selector& sel) {
  if (const auto* idx = std::get_if<Vertex>(&sel)) return *idx;
  return std::get<std::string>(sel);
}

Selector selector_from_json(const json& j) {
  if (j.is_number_unsigned()) return j.get<Vertex>();
  if (j.is_string()) return j.get<std::string>();
  throw Error(ErrorCode::kParseError, "selector must be a vertex index or a role name");
}

Graph graph_from(const json& j) { return io::from_json(j.dump()); }

}  // namespace

json spec_to_json(const FamilySpec& spec) {
  json j;
  j["kind"] = std::string(to_string(spec.kind));
  j["params"] = spec.params;
  if (!spec.parts.empty()) {
    json parts = json::array();
    for (const auto& part : spec.parts) {
      json pj = spec_to_json(part.spec);
      pj["x"] = selector_to_json(part.x);
      if (part.y) pj["y"] = selector_to_json(*part.y);
      parts.push_back(std::move(pj));
    }
    j["parts"] = std::move(parts);
  }
  if (spec.nanostar_bases) {
    j["F"] = json::parse(io::to_json(spec.nanostar_bases->f));
    j["G1"] = json::parse(io::to_json(spec.nanostar_bases->g1));
  }
  return j;
}

FamilySpec spec_from_json(const json& j) {
  try {
    FamilySpec spec;
    spec.kind = parse_family_kind(j.at("kind").get<std::string>());
    if (j.contains("params")) spec.params = j["params"].get<std::vector<std::int64_t>>();
    if (j.contains("parts")) {
      for (const auto& pj : j["parts"]) {
        FamilyPart part;
        part.spec = spec_from_json(pj);
        if (pj.contains("x")) part.x = selector_from_json(pj["x"]);
        if (pj.contains("y")) part.y = selector_from_json(pj["y"]);
        spec.parts.push_back(std::move(part));
      }
    }
    if (j.contains("F") || j.contains("G1")) {
      auto defaults = default_nanostar_bases();
      spec.nanostar_bases = NanostarBases{j.contains("F") ? graph_from(j["F"]) : defaults.f,
                                          j.contains("G1") ? graph_from(j["G1"]) : defaults.g1};
    }
    return spec;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

FamilySpec parse_spec(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  return spec_from_json(j);
}

}  // namespace symbreak::gen
