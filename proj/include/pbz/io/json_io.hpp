#pragma once

#include <filesystem>

#include "json.hpp"
#include "pbz/axioms.hpp"
#include "pbz/logic_spec.hpp"
#include "pbz/orthopair.hpp"

namespace pbz::io {

using Json = nlohmann::ordered_json;

/// Logic-spec document:
///
///   { "name": "triage",
///     "values": [ { "label": "hospitalize", "upward": ["sT"] },
///                 { "label": "expert", "upward": ["U","K","fK"],
///                                      "downward": ["U","K","fK"] }, ... ] }
///
/// "upward" and "downward" list truth values (T, sT, U, K, fK, sF, F); a
/// value with both lists is the intersection of the two unions.
Json to_json(const LogicSpec& spec);
/// Throws LogicSpecError on schema or grammar violations.
LogicSpec logic_spec_from_json(const Json& doc);
LogicSpec load_logic_spec(const std::filesystem::path& path);

/// { "positive": [ids], "negative": [ids] }
Json to_json(const Orthopair& p);
Orthopair orthopair_from_json(const Json& doc, const Universe& universe);

Json to_json(const AxiomReport& report);
Json to_json(const ValidationReport& report);

}  // namespace pbz::io
