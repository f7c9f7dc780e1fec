#include "plift/check.hpp"

#include "plift/binding.hpp"
#include "plift/evaluate.hpp"
#include "plift/lifting.hpp"

namespace plift {

std::string verdict_kind(const Verdict& v) {
  switch (v.index()) {
    case 0: return "AllVariantsSatisfy";
    case 1: return "Violation";
    default: return "SolverUnknown";
  }
}

CheckResult check_detailed(const ProductLine& pl, const TypedConstraint& c,
                           const SolverOptions& options) {
  CheckResult out;
  out.script = emit_smt(pl, lift(c));
  out.solver = run_solver(out.script.text(), options);
  switch (out.solver.status) {
    case SolverStatus::Unsat:
      out.verdict = AllVariantsSatisfy{};
      break;
    case SolverStatus::Sat: {
      Configuration k = decode_model(out.solver.output, pl.feature_model);
      bool holds = evaluate(c, pl.metamodel, bind(pl, k).graph);
      out.verdict = Violation{std::move(k), !holds};
      break;
    }
    case SolverStatus::Unknown:
      out.verdict = SolverUnknown{"solver answered unknown"};
      break;
    case SolverStatus::Timeout:
      out.verdict = SolverUnknown{"timeout after " + std::to_string(options.timeout.count()) + " s"};
      break;
  }
  return out;
}

Verdict check(const ProductLine& pl, const TypedConstraint& c, const SolverOptions& options) {
  return check_detailed(pl, c, options).verdict;
}

}  // namespace plift
