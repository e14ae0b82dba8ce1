#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace pbz::io {

using CsvRow = std::vector<std::string>;

struct CsvRecord {
  std::size_t line;  ///< 1-based line where the record starts
  CsvRow fields;
};

/// Comma-separated records with RFC 4180 quoting. LF and CRLF line ends are
/// accepted, a leading UTF-8 byte-order mark is dropped, and a final line
/// break is optional. Blank lines are skipped.
///
/// Throws ParseError on an unterminated quoted field or on stray characters
/// after a closing quote.
std::vector<CsvRecord> parse_csv(std::string_view text);

}  // namespace pbz::io
