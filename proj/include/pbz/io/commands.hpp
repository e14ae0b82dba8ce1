#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pbz/axioms.hpp"
#include "pbz/io/decision_table.hpp"
#include "pbz/io/json_io.hpp"
#include "pbz/logic_spec.hpp"
#include "pbz/truth_value.hpp"

namespace pbz::io {

enum class OutputFormat { text, json };

/// Process exit statuses of the command-line tool.
enum ExitStatus : int { kExitOk = 0, kExitDataError = 1, kExitCheckFailed = 2 };

struct RunConfig {
  std::optional<std::filesystem::path> input;
  TableConfig table;
  /// Built-in logic name; ignored when `logic_spec_path` is set.
  std::string logic = "seven";
  std::optional<std::filesystem::path> logic_spec_path;
  OutputFormat format = OutputFormat::text;
  AxiomBudget axiom_budget;
  ValidationBudget validation_budget;
  /// Universe sizes swept over all set partitions when there is no input.
  std::vector<std::size_t> synthetic_sizes;
  /// Test-only fault injection for `verify`.
  Mutation mutation = Mutation::none;
};

struct Provenance {
  std::string input_sha256;
  std::vector<std::pair<std::string, std::string>> config;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct ObjectClassification {
  std::string id;
  TruthValue seven = TruthValue::U;
  std::string derived;

  friend bool operator==(const ObjectClassification&, const ObjectClassification&) = default;
};

struct ClassificationReport {
  static constexpr int kSchemaVersion = 1;

  std::string logic;
  std::vector<std::string> labels;
  std::vector<ObjectClassification> objects;
  std::array<std::size_t, 7> seven_counts{};
  std::vector<std::size_t> derived_counts;
  Provenance provenance;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

/// The logic named by the config: a spec file if given, else a built-in.
LogicSpec resolve_logic(const RunConfig& config);

ClassificationReport classify_command(const RunConfig& config);

Json to_json(const ClassificationReport& report);
/// Throws Error when the document does not follow the report schema.
ClassificationReport classification_report_from_json(const Json& doc);
std::string render(const ClassificationReport& report, OutputFormat format);

struct VerifyCase {
  std::string label;
  std::vector<AxiomReport> reports;
  bool certified = false;
};

struct VerifyReport {
  std::vector<VerifyCase> cases;
  bool certified = false;
  Provenance provenance;
};

/// Runs every axiom on the input's knowledge base, or on every set
/// partition of each synthetic universe size.
VerifyReport verify_command(const RunConfig& config);
Json to_json(const VerifyReport& report);
std::string render(const VerifyReport& report, OutputFormat format);

struct ValidateLogicCase {
  std::string label;
  ValidationReport report;
};

struct ValidateLogicReport {
  std::string logic;
  std::vector<ValidateLogicCase> cases;
  bool valid = false;
  Provenance provenance;
};

ValidateLogicReport validate_logic_command(const RunConfig& config);
Json to_json(const ValidateLogicReport& report);
std::string render(const ValidateLogicReport& report, OutputFormat format);

std::string list_logics_command(OutputFormat format);

/// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

}  // namespace pbz::io
