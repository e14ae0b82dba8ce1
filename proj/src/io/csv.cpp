#include "pbz/io/csv.hpp"

#include "pbz/error.hpp"

namespace pbz::io {

std::vector<CsvRecord> parse_csv(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<CsvRecord> rows;
  CsvRow row;
  std::string field;
  std::size_t line = 1;
  std::size_t row_line = 1;
  std::size_t column = 1;
  bool in_quotes = false;
  bool after_quote = false;
  bool row_has_content = false;

  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    after_quote = false;
    ++column;
  };
  auto end_row = [&] {
    end_field();
    if (row_has_content) rows.push_back({row_line, std::move(row)});
    row.clear();
    row_has_content = false;
    column = 1;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
          after_quote = true;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case ',':
        row_has_content = true;
        end_field();
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;
        [[fallthrough]];
      case '\n':
        end_row();
        ++line;
        row_line = line;
        break;
      case '"':
        if (!field.empty() || after_quote) throw ParseError("unexpected quote", line, column);
        in_quotes = true;
        row_has_content = true;
        break;
      default:
        if (after_quote) throw ParseError("characters after closing quote", line, column);
        field += c;
        row_has_content = true;
        break;
    }
  }
  if (in_quotes) throw ParseError("unterminated quoted field", line, column);
  if (row_has_content || !field.empty()) end_row();
  return rows;
}

}  // namespace pbz::io
