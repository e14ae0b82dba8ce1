#include "pbz/io/commands.hpp"

#include <openssl/evp.h>

#include <iomanip>
#include <sstream>

#include "pbz/error.hpp"
#include "pbz/seven_logic.hpp"

namespace pbz::io {

namespace {

std::string join_set(const std::set<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ',';
    out += '"' + t + '"';
  }
  return out;
}

std::string join_list(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ',';
    out += s;
  }
  return out;
}

std::string sizes_string(const std::vector<std::size_t>& sizes) {
  std::string out;
  for (auto n : sizes) {
    if (!out.empty()) out += ',';
    out += std::to_string(n);
  }
  return out;
}

std::string logic_name(const RunConfig& config) {
  return config.logic_spec_path ? config.logic_spec_path->string() : config.logic;
}

void echo_table(const RunConfig& config, Provenance& prov,
                const std::vector<std::string>& attributes_used) {
  prov.config.emplace_back("input", config.input ? config.input->string() : "");
  prov.config.emplace_back("attributes", join_list(attributes_used));
  prov.config.emplace_back("decision_column", config.table.decision_column.value_or(""));
  prov.config.emplace_back("positive", join_set(config.table.mapping.positive));
  prov.config.emplace_back("negative", join_set(config.table.mapping.negative));
  prov.config.emplace_back("unknown", join_set(config.table.mapping.unknown));
}

struct Subject {
  std::string label;
  KnowledgeBase kb;
};

std::string partition_label(const KnowledgeBase& kb) {
  std::string out;
  for (const auto& block : kb.blocks()) out += block.to_string();
  return out;
}

// Either the loaded table's kb, or every partition of each synthetic size.
std::vector<Subject> subjects(const RunConfig& config, Provenance& prov) {
  std::vector<Subject> out;
  if (config.input) {
    const std::string text = read_file(*config.input);
    prov.input_sha256 = sha256_hex(text);
    auto loaded = load_table_from_string(text, config.table);
    echo_table(config, prov, loaded.attributes_used);
    out.push_back({config.input->filename().string(), std::move(loaded.kb)});
    return out;
  }
  std::vector<std::size_t> sizes = config.synthetic_sizes;
  if (sizes.empty()) sizes = {1, 2, 3, 4};
  prov.config.emplace_back("synthetic_sizes", sizes_string(sizes));
  for (auto n : sizes) {
    if (n == 0 || n > 8) throw Error("synthetic universe size must be between 1 and 8");
    for (auto& kb : enumerate_partitions(Universe::of_size(n))) {
      auto label = "n=" + std::to_string(n) + " " + partition_label(kb);
      out.push_back({std::move(label), std::move(kb)});
    }
  }
  return out;
}

Json provenance_json(const Provenance& prov) {
  Json config = Json::object();
  for (const auto& [k, v] : prov.config) config[k] = v;
  Json out;
  out["input_sha256"] = prov.input_sha256;
  out["config"] = std::move(config);
  return out;
}

Provenance provenance_from_json(const Json& doc) {
  Provenance prov;
  prov.input_sha256 = doc.at("input_sha256").get<std::string>();
  for (const auto& [k, v] : doc.at("config").items()) {
    prov.config.emplace_back(k, v.get<std::string>());
  }
  return prov;
}

void render_provenance(std::ostream& out, const Provenance& prov) {
  out << "input sha256: " << (prov.input_sha256.empty() ? "-" : prov.input_sha256) << '\n';
  for (const auto& [k, v] : prov.config) out << "config " << k << ": " << v << '\n';
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw InternalError("SHA-256 digest failed");
  }
  std::ostringstream out;
  out << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < length; ++i) out << std::setw(2) << static_cast<int>(digest[i]);
  return out.str();
}

LogicSpec resolve_logic(const RunConfig& config) {
  if (config.logic_spec_path) return load_logic_spec(*config.logic_spec_path);
  auto spec = find_logic(config.logic);
  if (!spec) throw LogicSpecError("unknown logic '" + config.logic + "'");
  return *spec;
}

ClassificationReport classify_command(const RunConfig& config) {
  if (!config.input) throw Error("classify needs an input table");
  const LogicSpec spec = resolve_logic(config);
  const std::string text = read_file(*config.input);
  const auto loaded = load_table_from_string(text, config.table);

  ClassificationReport report;
  report.logic = spec.name();
  for (const auto& def : spec.values()) report.labels.push_back(def.label);
  report.provenance.input_sha256 = sha256_hex(text);
  echo_table(config, report.provenance, loaded.attributes_used);
  report.provenance.config.emplace_back("logic", logic_name(config));

  const auto seven = seven_partition(loaded.kb, loaded.target);
  const auto derived = evaluate_logic(loaded.kb, loaded.target, spec);
  report.seven_counts = seven.counts();
  report.derived_counts.assign(spec.size(), 0);
  const auto& universe = loaded.kb.universe();
  for (std::size_t x = 0; x < universe.size(); ++x) {
    const auto d = derived.value_of(x);
    ++report.derived_counts[d];
    report.objects.push_back({universe.id(x), seven.value_of(x), spec.values()[d].label});
  }
  return report;
}

Json to_json(const ClassificationReport& report) {
  Json objects = Json::array();
  for (const auto& o : report.objects) {
    Json row;
    row["id"] = o.id;
    row["seven"] = std::string(to_string(o.seven));
    row["derived"] = o.derived;
    objects.push_back(std::move(row));
  }
  Json seven = Json::object();
  for (auto v : kTruthValues) seven[std::string(to_string(v))] = report.seven_counts[index_of(v)];
  Json derived = Json::object();
  for (std::size_t i = 0; i < report.labels.size(); ++i) {
    derived[report.labels[i]] = report.derived_counts[i];
  }
  Json out;
  out["schema_version"] = ClassificationReport::kSchemaVersion;
  out["logic"] = report.logic;
  out["objects"] = std::move(objects);
  out["counts"] = {{"seven", std::move(seven)}, {"derived", std::move(derived)}};
  out["provenance"] = provenance_json(report.provenance);
  return out;
}

ClassificationReport classification_report_from_json(const Json& doc) {
  try {
    if (doc.at("schema_version").get<int>() != ClassificationReport::kSchemaVersion) {
      throw Error("unsupported report schema_version");
    }
    ClassificationReport report;
    report.logic = doc.at("logic").get<std::string>();
    for (const auto& row : doc.at("objects")) {
      auto v = parse_truth_value(row.at("seven").get<std::string>());
      if (!v) throw Error("bad truth value in report");
      report.objects.push_back(
          {row.at("id").get<std::string>(), *v, row.at("derived").get<std::string>()});
    }
    const Json& counts = doc.at("counts");
    for (auto v : kTruthValues) {
      report.seven_counts[index_of(v)] =
          counts.at("seven").at(std::string(to_string(v))).get<std::size_t>();
    }
    for (const auto& [label, n] : counts.at("derived").items()) {
      report.labels.push_back(label);
      report.derived_counts.push_back(n.get<std::size_t>());
    }
    report.provenance = provenance_from_json(doc.at("provenance"));
    return report;
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed classification report: ") + e.what());
  }
}

std::string render(const ClassificationReport& report, OutputFormat format) {
  if (format == OutputFormat::json) return dump(to_json(report));
  std::ostringstream out;
  out << "schema version: " << ClassificationReport::kSchemaVersion << '\n';
  out << "logic: " << report.logic << '\n';
  out << "object\tseven\tderived\n";
  for (const auto& o : report.objects) {
    out << o.id << '\t' << to_string(o.seven) << '\t' << o.derived << '\n';
  }
  out << "seven counts:";
  for (auto v : kTruthValues) out << ' ' << to_string(v) << '=' << report.seven_counts[index_of(v)];
  out << "\nderived counts:";
  for (std::size_t i = 0; i < report.labels.size(); ++i) {
    out << ' ' << report.labels[i] << '=' << report.derived_counts[i];
  }
  out << '\n';
  render_provenance(out, report.provenance);
  return out.str();
}

VerifyReport verify_command(const RunConfig& config) {
  VerifyReport report;
  auto subs = subjects(config, report.provenance);
  report.provenance.config.emplace_back("max_tuples", std::to_string(config.axiom_budget.max_tuples));
  report.provenance.config.emplace_back("samples", std::to_string(config.axiom_budget.samples));
  report.provenance.config.emplace_back("seed", std::to_string(config.axiom_budget.seed));
  if (config.mutation != Mutation::none) {
    report.provenance.config.emplace_back("mutation", std::string(to_string(config.mutation)));
  }
  report.certified = true;
  for (auto& s : subs) {
    VerifyCase c{std::move(s.label), check_all(s.kb, config.axiom_budget, config.mutation), false};
    c.certified = pbz_certified(c.reports);
    report.certified = report.certified && c.certified;
    report.cases.push_back(std::move(c));
  }
  return report;
}

Json to_json(const VerifyReport& report) {
  Json cases = Json::array();
  for (const auto& c : report.cases) {
    Json reports = Json::array();
    for (const auto& r : c.reports) reports.push_back(to_json(r));
    Json item;
    item["knowledge_base"] = c.label;
    item["certified"] = c.certified;
    item["axioms"] = std::move(reports);
    cases.push_back(std::move(item));
  }
  Json out;
  out["schema_version"] = ClassificationReport::kSchemaVersion;
  out["certified"] = report.certified;
  out["cases"] = std::move(cases);
  out["provenance"] = provenance_json(report.provenance);
  return out;
}

std::string render(const VerifyReport& report, OutputFormat format) {
  if (format == OutputFormat::json) return dump(to_json(report));
  std::ostringstream out;
  for (const auto& c : report.cases) {
    out << c.label << ": " << (c.certified ? "certified" : "NOT certified") << '\n';
    for (const auto& r : c.reports) {
      if (r.status == AxiomStatus::holds && r.exhaustive) continue;
      out << "  " << to_string(r.axiom) << ' ' << to_string(r.status)
          << (r.exhaustive ? " exhaustive " : " sampled ") << r.cases_checked << " cases";
      for (const auto& w : r.witness) out << ' ' << w.to_string();
      if (!r.detail.empty()) out << " (" << r.detail << ')';
      out << '\n';
    }
  }
  out << (report.certified ? "all axioms hold" : "axiom check failed") << " on "
      << report.cases.size() << " knowledge base(s)\n";
  render_provenance(out, report.provenance);
  return out.str();
}

ValidateLogicReport validate_logic_command(const RunConfig& config) {
  ValidateLogicReport report;
  const LogicSpec spec = resolve_logic(config);
  report.logic = spec.name();
  auto subs = subjects(config, report.provenance);
  report.provenance.config.emplace_back("logic", logic_name(config));
  report.valid = true;
  for (const auto& s : subs) {
    auto r = validate_logic(s.kb, spec, config.validation_budget);
    report.valid = report.valid && r.status == ValidationStatus::valid;
    report.cases.push_back({s.label, std::move(r)});
  }
  return report;
}

Json to_json(const ValidateLogicReport& report) {
  Json cases = Json::array();
  for (const auto& c : report.cases) {
    Json item = to_json(c.report);
    item["knowledge_base"] = c.label;
    cases.push_back(std::move(item));
  }
  Json out;
  out["schema_version"] = ClassificationReport::kSchemaVersion;
  out["logic"] = report.logic;
  out["valid"] = report.valid;
  out["cases"] = std::move(cases);
  out["provenance"] = provenance_json(report.provenance);
  return out;
}

std::string render(const ValidateLogicReport& report, OutputFormat format) {
  if (format == OutputFormat::json) return dump(to_json(report));
  std::ostringstream out;
  out << "logic: " << report.logic << '\n';
  for (const auto& c : report.cases) {
    const auto& r = c.report;
    out << c.label << ": " << to_string(r.status) << (r.exhaustive ? " exhaustive " : " sampled ")
        << r.cases_checked << " cases";
    if (r.witness) out << " witness " << r.witness->to_string();
    if (r.clashing && !r.clashing->empty()) out << " clashing " << r.clashing->to_string();
    if (r.uncovered && !r.uncovered->empty()) out << " uncovered " << r.uncovered->to_string();
    if (!r.clashing_labels.empty()) out << " labels " << join_list(r.clashing_labels);
    out << '\n';
  }
  out << (report.valid ? "valid" : "not valid") << '\n';
  render_provenance(out, report.provenance);
  return out.str();
}

std::string list_logics_command(OutputFormat format) {
  std::vector<LogicSpec> logics{seven_valued_logic()};
  for (auto& l : builtin_logics()) logics.push_back(std::move(l));
  if (format == OutputFormat::json) {
    Json out = Json::array();
    for (const auto& l : logics) out.push_back(to_json(l));
    return dump(out);
  }
  std::ostringstream out;
  for (const auto& l : logics) {
    out << l.name() << '\n';
    for (const auto& def : l.values()) out << "  " << def.label << " = " << describe(def) << '\n';
  }
  return out.str();
}

}  // namespace pbz::io
