#include "pbz/io/decision_table.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "pbz/error.hpp"
#include "pbz/io/csv.hpp"

namespace pbz::io {

namespace {

std::string normalize_token(std::string_view token) {
  auto is_blank = [](char c) { return c == ' ' || c == '\t'; };
  while (!token.empty() && is_blank(token.front())) token.remove_prefix(1);
  while (!token.empty() && is_blank(token.back())) token.remove_suffix(1);
  std::string out(token);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool contains_token(const std::set<std::string>& tokens, const std::string& normalized) {
  return std::any_of(tokens.begin(), tokens.end(),
                     [&](const std::string& t) { return normalize_token(t) == normalized; });
}

}  // namespace

std::optional<Decision> DecisionMapping::map(std::string_view token) const {
  const std::string t = normalize_token(token);
  const bool pos = contains_token(positive, t);
  const bool neg = contains_token(negative, t);
  const bool unk = contains_token(unknown, t);
  if (pos + neg + unk != 1) return std::nullopt;
  if (pos) return Decision::positive;
  if (neg) return Decision::negative;
  return Decision::unknown;
}

DecisionTable parse_decision_table(std::string_view text,
                                   const std::optional<std::string>& decision_column) {
  const auto records = parse_csv(text);
  if (records.empty()) throw ParseError("decision table is empty", 1);
  const auto& header = records.front().fields;
  if (header.size() < 2) {
    throw ParseError("header needs an id column and a decision column", records.front().line);
  }

  std::size_t decision_index = header.size() - 1;
  if (decision_column) {
    auto it = std::find(header.begin(), header.end(), *decision_column);
    if (it == header.end()) {
      throw ParseError("decision column '" + *decision_column + "' not in header",
                       records.front().line);
    }
    decision_index = static_cast<std::size_t>(it - header.begin());
    if (decision_index == 0) {
      throw ParseError("the id column cannot be the decision column", records.front().line, 1);
    }
  }
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (std::count(header.begin(), header.end(), header[c]) > 1) {
      throw ParseError("duplicate column name '" + header[c] + "'", records.front().line, c + 1);
    }
  }

  DecisionTable table;
  table.id_column = header[0];
  table.decision_name = header[decision_index];
  table.decision_index = decision_index;
  for (std::size_t c = 1; c < header.size(); ++c) {
    if (c != decision_index) table.attribute_names.push_back(header[c]);
  }
  if (records.size() < 2) throw ParseError("decision table has no data rows", records.front().line);

  std::set<std::string> seen;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.fields.size() != header.size()) {
      throw ParseError("expected " + std::to_string(header.size()) + " fields, found " +
                           std::to_string(rec.fields.size()),
                       rec.line);
    }
    const std::string& id = rec.fields[0];
    if (id.empty()) throw ParseError("empty object id", rec.line, 1);
    if (!seen.insert(id).second) throw ParseError("duplicate object id '" + id + "'", rec.line, 1);
    std::vector<std::string> values;
    for (std::size_t c = 1; c < rec.fields.size(); ++c) {
      if (c != decision_index) values.push_back(rec.fields[c]);
    }
    table.ids.push_back(id);
    table.attributes.push_back(std::move(values));
    table.decisions.push_back(rec.fields[decision_index]);
    table.lines.push_back(rec.line);
  }
  return table;
}

LoadedTable load_table_from_string(std::string_view text, const TableConfig& config) {
  DecisionTable table = parse_decision_table(text, config.decision_column);

  std::vector<std::size_t> selected;
  std::vector<std::string> used;
  if (config.attributes.empty()) {
    for (std::size_t c = 0; c < table.attribute_names.size(); ++c) selected.push_back(c);
    used = table.attribute_names;
  } else {
    for (const auto& name : config.attributes) {
      auto it = std::find(table.attribute_names.begin(), table.attribute_names.end(), name);
      if (it == table.attribute_names.end()) {
        throw Error("attribute '" + name + "' is not a condition column");
      }
      selected.push_back(static_cast<std::size_t>(it - table.attribute_names.begin()));
      used.push_back(name);
    }
  }

  Universe universe(table.ids);
  std::vector<AttributeRow> rows;
  rows.reserve(table.ids.size());
  for (std::size_t r = 0; r < table.ids.size(); ++r) {
    AttributeRow row{table.ids[r], {}};
    for (auto c : selected) row.values.push_back(table.attributes[r][c]);
    rows.push_back(std::move(row));
  }
  KnowledgeBase kb = build_from_attributes(universe, rows);

  ObjectSet positive(universe);
  ObjectSet negative(universe);
  for (std::size_t r = 0; r < table.ids.size(); ++r) {
    auto d = config.mapping.map(table.decisions[r]);
    if (!d) {
      throw ParseError("decision token '" + table.decisions[r] + "' is not mapped",
                       table.lines[r], table.decision_index + 1);
    }
    if (*d == Decision::positive) positive.insert(r);
    if (*d == Decision::negative) negative.insert(r);
  }
  Orthopair target(std::move(positive), std::move(negative));
  return LoadedTable{std::move(table), std::move(used), std::move(kb), std::move(target)};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

LoadedTable load_table(const std::filesystem::path& path, const TableConfig& config) {
  return load_table_from_string(read_file(path), config);
}

}  // namespace pbz::io
