#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace plift {

enum class ErrorKind {
  InvalidIdentifier,
  DuplicateName,
  UnknownType,
  UnknownAttribute,
  BasicTypeHasNoAttributes,
  UnknownObject,
  NavigationKindError,
  SyntaxError,
  UnboundVariable,
  UnknownTypeInQuantifier,
  AtomTypeMismatch,
  UnknownFeature,
  InvalidConfiguration,
  TooManyFeatures,
  InvalidProductLine,
  UnsupportedAtom,
  SymbolClash,
  SolverProcessError,
  SolverParseError,
  DecodeError,
  FormatError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Parse failure in one of the textual DSLs. Line and column are 1-based.
class SyntaxError : public Error {
public:
  SyntaxError(std::string message, int line, int column,
              std::vector<std::string> expected);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept {
    return expected_;
  }

private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

/// A finding of one of the validators. `owner` is a class name or an object
/// id, `member` an attribute or slot name, `detail` the offending type, id or
/// kind.
struct Diagnostic {
  std::string owner;
  std::string member;
  std::string detail;
  std::string message;

  auto operator<=>(const Diagnostic&) const = default;
};

using Report = std::vector<Diagnostic>;

std::string format_report(const Report& report);

}  // namespace plift
