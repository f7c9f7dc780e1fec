#include "plift/error.hpp"

#include <sstream>

namespace plift {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidIdentifier: return "InvalidIdentifier";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::UnknownType: return "UnknownType";
    case ErrorKind::UnknownAttribute: return "UnknownAttribute";
    case ErrorKind::BasicTypeHasNoAttributes: return "BasicTypeHasNoAttributes";
    case ErrorKind::UnknownObject: return "UnknownObject";
    case ErrorKind::NavigationKindError: return "NavigationKindError";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::UnknownTypeInQuantifier: return "UnknownTypeInQuantifier";
    case ErrorKind::AtomTypeMismatch: return "AtomTypeMismatch";
    case ErrorKind::UnknownFeature: return "UnknownFeature";
    case ErrorKind::InvalidConfiguration: return "InvalidConfiguration";
    case ErrorKind::TooManyFeatures: return "TooManyFeatures";
    case ErrorKind::InvalidProductLine: return "InvalidProductLine";
    case ErrorKind::UnsupportedAtom: return "UnsupportedAtom";
    case ErrorKind::SymbolClash: return "SymbolClash";
    case ErrorKind::SolverProcessError: return "SolverProcessError";
    case ErrorKind::SolverParseError: return "SolverParseError";
    case ErrorKind::DecodeError: return "DecodeError";
    case ErrorKind::FormatError: return "FormatError";
  }
  return "Error";
}

namespace {

std::string syntax_message(const std::string& message, int line, int column,
                           const std::vector<std::string>& expected) {
  std::ostringstream out;
  out << line << ":" << column << ": " << message;
  if (!expected.empty()) {
    out << " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) out << ", ";
      out << expected[i];
    }
    out << ")";
  }
  return out.str();
}

}  // namespace

SyntaxError::SyntaxError(std::string message, int line, int column,
                         std::vector<std::string> expected)
    : Error(ErrorKind::SyntaxError,
            syntax_message(message, line, column, expected)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

std::string format_report(const Report& report) {
  std::ostringstream out;
  for (const auto& d : report) out << d.message << "\n";
  return out.str();
}

}  // namespace plift
