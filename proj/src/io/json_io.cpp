#include "pbz/io/json_io.hpp"

#include "pbz/error.hpp"
#include "pbz/io/decision_table.hpp"

namespace pbz::io {

namespace {

Json values_to_json(const std::vector<TruthValue>& values) {
  Json out = Json::array();
  for (auto v : values) out.push_back(std::string(to_string(v)));
  return out;
}

std::vector<TruthValue> values_from_json(const Json& doc, const std::string& label,
                                         const char* key) {
  std::vector<TruthValue> out;
  if (!doc.contains(key)) return out;
  const Json& list = doc.at(key);
  if (!list.is_array()) throw LogicSpecError("'" + std::string(key) + "' of '" + label + "' must be an array");
  for (const auto& item : list) {
    if (!item.is_string()) throw LogicSpecError("truth values must be strings in '" + label + "'");
    auto v = parse_truth_value(item.get<std::string>());
    if (!v) {
      throw LogicSpecError("unknown truth value '" + item.get<std::string>() + "' in '" + label +
                           "'");
    }
    out.push_back(*v);
  }
  return out;
}

}  // namespace

Json to_json(const LogicSpec& spec) {
  Json values = Json::array();
  for (const auto& def : spec.values()) {
    Json v;
    v["label"] = def.label;
    if (!def.upward.empty()) v["upward"] = values_to_json(def.upward);
    if (!def.downward.empty()) v["downward"] = values_to_json(def.downward);
    values.push_back(std::move(v));
  }
  Json out;
  out["name"] = spec.name();
  out["values"] = std::move(values);
  return out;
}

LogicSpec logic_spec_from_json(const Json& doc) {
  if (!doc.is_object()) throw LogicSpecError("logic spec must be a JSON object");
  if (!doc.contains("name") || !doc["name"].is_string()) {
    throw LogicSpecError("logic spec needs a string 'name'");
  }
  if (!doc.contains("values") || !doc["values"].is_array()) {
    throw LogicSpecError("logic spec needs a 'values' array");
  }
  std::vector<ValueDefinition> defs;
  for (const auto& item : doc["values"]) {
    if (!item.is_object() || !item.contains("label") || !item["label"].is_string()) {
      throw LogicSpecError("each value needs a string 'label'");
    }
    for (const auto& [key, _] : item.items()) {
      if (key != "label" && key != "upward" && key != "downward") {
        throw LogicSpecError("unexpected key '" + key + "' in value definition");
      }
    }
    ValueDefinition def;
    def.label = item["label"].get<std::string>();
    def.upward = values_from_json(item, def.label, "upward");
    def.downward = values_from_json(item, def.label, "downward");
    defs.push_back(std::move(def));
  }
  return LogicSpec(doc["name"].get<std::string>(), std::move(defs));
}

LogicSpec load_logic_spec(const std::filesystem::path& path) {
  Json doc;
  try {
    doc = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw LogicSpecError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
  return logic_spec_from_json(doc);
}

Json to_json(const Orthopair& p) {
  Json out;
  out["positive"] = p.positive().ids();
  out["negative"] = p.negative().ids();
  return out;
}

Orthopair orthopair_from_json(const Json& doc, const Universe& universe) {
  auto ids = [&](const char* key) {
    if (!doc.contains(key) || !doc[key].is_array()) {
      throw Error(std::string("orthopair needs a '") + key + "' array");
    }
    return ObjectSet::of(universe, doc[key].get<std::vector<std::string>>());
  };
  return Orthopair(ids("positive"), ids("negative"));
}

Json to_json(const AxiomReport& report) {
  Json out;
  out["axiom"] = std::string(to_string(report.axiom));
  out["status"] = std::string(to_string(report.status));
  out["exhaustive"] = report.exhaustive;
  out["cases_checked"] = report.cases_checked;
  if (!report.witness.empty()) {
    Json w = Json::array();
    for (const auto& p : report.witness) w.push_back(to_json(p));
    out["witness"] = std::move(w);
  }
  if (!report.detail.empty()) out["detail"] = report.detail;
  return out;
}

Json to_json(const ValidationReport& report) {
  Json out;
  out["status"] = std::string(to_string(report.status));
  out["exhaustive"] = report.exhaustive;
  out["cases_checked"] = report.cases_checked;
  if (report.witness) out["witness"] = to_json(*report.witness);
  if (report.clashing) out["clashing"] = report.clashing->ids();
  if (report.uncovered) out["uncovered"] = report.uncovered->ids();
  if (!report.clashing_labels.empty()) out["clashing_labels"] = report.clashing_labels;
  return out;
}

}  // namespace pbz::io
