#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lingres {

enum class ErrorCode {
  DuplicateHedgeName,
  ReservedName,
  NegativeDepth,
  MalformedTerm,
  UnknownToken,
  DepthExceeded,
  UnassignedAtom,
  ResourceLimit,
  NotResolvable,
  SyntaxError,
  UnknownHedge,
  BadReliability,
  BadOption,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Error raised while reading problem or formula text. Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string& message, std::size_t line,
             std::size_t column)
      : Error(code, "line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace lingres
