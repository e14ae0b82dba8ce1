#pragma once

#include <stdexcept>
#include <string>

namespace pbz {

/// Base class for every error raised on bad input data or bad arguments.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands were built over different universes.
class UniverseMismatchError : public Error {
public:
  UniverseMismatchError() : Error("operands belong to different universes") {}
};

class UnknownObjectError : public Error {
public:
  explicit UnknownObjectError(const std::string& id)
      : Error("unknown object '" + id + "'") {}
};

/// Blocks that overlap, are empty or fail to cover the universe.
class PartitionError : public Error {
public:
  using Error::Error;
};

/// Positive and negative regions of an orthopair intersect.
class OrthopairError : public Error {
public:
  using Error::Error;
};

class TermSyntaxError : public Error {
public:
  TermSyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// A logic definition that violates the union/intersection grammar,
/// or an evaluation whose derived values do not partition the universe.
class LogicSpecError : public Error {
public:
  using Error::Error;
};

/// Malformed input file. Row and column are 1-based; 0 means "not applicable".
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t row, std::size_t column = 0)
      : Error(format(what, row, column)), row_(row), column_(column) {}
  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

private:
  static std::string format(const std::string& what, std::size_t row,
                            std::size_t column) {
    std::string out = what;
    if (row != 0) {
      out += " (row " + std::to_string(row);
      if (column != 0) out += ", column " + std::to_string(column);
      out += ")";
    }
    return out;
  }
  std::size_t row_;
  std::size_t column_;
};

/// Raised only when an internal invariant breaks; never caused by user data.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace pbz
