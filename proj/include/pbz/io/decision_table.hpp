#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pbz/knowledge_base.hpp"
#include "pbz/orthopair.hpp"

namespace pbz::io {

/// Object ids, condition attributes and one decision column, as read from CSV.
struct DecisionTable {
  std::string id_column;
  std::vector<std::string> attribute_names;
  std::string decision_name;
  /// 0-based position of the decision column in the header.
  std::size_t decision_index = 0;
  std::vector<std::string> ids;
  /// attributes[r][c] is attribute c of row r.
  std::vector<std::vector<std::string>> attributes;
  std::vector<std::string> decisions;
  /// Source line of each data row, for diagnostics.
  std::vector<std::size_t> lines;
};

enum class Decision { positive, negative, unknown };

/// Three-way dictionary from decision tokens to labels. Tokens are matched
/// after trimming surrounding blanks, ignoring ASCII case.
struct DecisionMapping {
  std::set<std::string> positive{"1", "yes", "true"};
  std::set<std::string> negative{"0", "no", "false"};
  std::set<std::string> unknown{"?", "unknown", ""};

  std::optional<Decision> map(std::string_view token) const;
};

struct TableConfig {
  /// Defaults to the last column.
  std::optional<std::string> decision_column;
  /// Condition attributes used for indiscernibility; empty means all of them.
  std::vector<std::string> attributes;
  DecisionMapping mapping;
};

/// Header row first; the first column holds object ids.
/// Throws ParseError (with row and column) on malformed input.
DecisionTable parse_decision_table(std::string_view text,
                                   const std::optional<std::string>& decision_column);

struct LoadedTable {
  DecisionTable table;
  std::vector<std::string> attributes_used;
  KnowledgeBase kb;
  /// ⟨positive-labelled, negative-labelled⟩
  Orthopair target;
};

LoadedTable load_table_from_string(std::string_view text, const TableConfig& config);
/// Throws Error if the file cannot be read.
LoadedTable load_table(const std::filesystem::path& path, const TableConfig& config);

std::string read_file(const std::filesystem::path& path);

}  // namespace pbz::io
