#pragma once

#include <string>

#include "plift/constraint.hpp"
#include "plift/typecheck.hpp"

namespace plift {

/// Result of lifting. Every quantifier over a type carries exactly one
/// `selected` guard; list quantifiers, navigations and atoms are unchanged.
struct LiftedConstraint {
  ExprRef root;
  bool operator==(const LiftedConstraint&) const = default;
};

/// forall v in T: e   becomes  forall v in T: selected(v) => lift(e)
/// exists v in T: e   becomes  exists v in T: selected(v) && lift(e)
/// Quantifiers over navigations recurse into the body only; the boolean
/// connectives are lifted homomorphically.
LiftedConstraint lift(const TypedConstraint& c);
ExprRef lift(const Expr& e);

/// Inverse of the guard insertion.
ExprRef strip_guards(const Expr& e);

/// Constraint DSL text with `selected(v)` guards; readable back with
/// parse_constraint(text, /*allow_selected=*/true).
std::string print_lifted(const LiftedConstraint& lc);

}  // namespace plift
