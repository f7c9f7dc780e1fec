#pragma once

#include <string>
#include <variant>

#include "plift/smt.hpp"
#include "plift/solver.hpp"
#include "plift/typecheck.hpp"
#include "plift/variability.hpp"

namespace plift {

struct AllVariantsSatisfy {};

struct Violation {
  Configuration config;
  bool confirmed = false;
};

struct SolverUnknown {
  std::string reason;
};

using Verdict = std::variant<AllVariantsSatisfy, Violation, SolverUnknown>;

std::string verdict_kind(const Verdict& v);

struct CheckResult {
  Verdict verdict;
  SmtScript script;
  SolverResult solver;
};

/// lift, emit, solve; a sat answer is decoded and re-checked on the bound
/// variant.
CheckResult check_detailed(const ProductLine& pl, const TypedConstraint& c,
                           const SolverOptions& options = {});

Verdict check(const ProductLine& pl, const TypedConstraint& c,
              const SolverOptions& options = {});

}  // namespace plift
