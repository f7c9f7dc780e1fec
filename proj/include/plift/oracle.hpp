#pragma once

#include <cstddef>
#include <string>
#include <variant>

#include "plift/binding.hpp"
#include "plift/check.hpp"

namespace plift {

struct OracleSatisfied {
  std::size_t count = 0;
  bool vacuous() const { return count == 0; }
};

struct OracleViolation {
  Configuration config;
  BoundVariant variant;
};

using OracleVerdict = std::variant<OracleSatisfied, OracleViolation>;

/// Enumerates valid configurations in order, binds each and evaluates the
/// unlifted constraint. Stops at the first violation.
OracleVerdict oracle_check(const ProductLine& pl, const TypedConstraint& c,
                           std::size_t cap = kDefaultEnumerationCap);

std::string verdict_kind(const OracleVerdict& v);

struct EquivalenceReport {
  bool agree = false;
  Verdict smt;
  OracleVerdict oracle;
  std::string script_path;  // set on disagreement
  std::string text;
};

/// Runs check and oracle_check. On disagreement the SMT script is written
/// to a temporary file named in the report.
EquivalenceReport equivalence_test(const ProductLine& pl, const TypedConstraint& c,
                                   const SolverOptions& options = {});

}  // namespace plift
