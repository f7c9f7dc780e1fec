#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "plift/variability.hpp"

namespace plift {

enum class SolverStatus { Sat, Unsat, Unknown, Timeout };

struct SolverResult {
  SolverStatus status = SolverStatus::Unknown;
  std::string output;  // full stdout
  std::string errors;  // stderr
  int exit_code = 0;
  std::chrono::milliseconds elapsed{0};
};

struct SolverOptions {
  std::string command;  // run through /bin/sh -c; empty = default_solver_command()
  std::chrono::seconds timeout{60};
};

/// PLIFT_SOLVER if set, otherwise the solver found at configure time run in
/// stdin mode.
std::string default_solver_command();

/// Feeds `script` on stdin and waits for the process. Throws
/// SolverProcessError when the process cannot be started or produces no
/// status, SolverParseError when it reports an error before its status.
SolverResult run_solver(const std::string& script, const SolverOptions& options);

/// Minimal s-expression, enough to read get-model responses.
struct SExpr {
  std::string atom;  // empty for lists
  std::vector<SExpr> items;
  bool is_list = false;
};

/// All top-level s-expressions in `text`. Throws SolverParseError.
std::vector<SExpr> parse_sexprs(const std::string& text);

/// Reads the feature constants from a get-model response; absent features
/// default to false. Throws DecodeError for non-boolean values and
/// InvalidConfiguration when the result violates the feature model.
Configuration decode_model(const std::string& solver_output, const FeatureModel& fm);

}  // namespace plift
