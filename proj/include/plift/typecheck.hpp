#pragma once

#include <string>
#include <vector>

#include "plift/constraint.hpp"
#include "plift/meta.hpp"

namespace plift {

enum class ValueKind { Int, Bool, String, Object, List };

/// Static type of a term. `cls` names the class for Object, and the element
/// class for List.
struct TermType {
  ValueKind kind;
  std::string cls;
  bool operator==(const TermType&) const = default;
};

std::string to_string(const TermType& t);

struct VarBinding {
  std::string var;
  std::string type;
  bool operator==(const VarBinding&) const = default;
};

/// Quantified variables in scope, innermost last.
using Scope = std::vector<VarBinding>;

struct NavigationInfo {
  /// owner_types[i] is the class that path[i] is looked up in.
  std::vector<std::string> owner_types;
  TermType result;
};

/// Throws UnboundVariable, UnknownAttribute or NavigationKindError.
NavigationInfo resolve_navigation(const Metamodel& mm, const Scope& scope,
                                  const Navigation& n);

TermType term_type(const Metamodel& mm, const Scope& scope, const Term& t);

/// A constraint that passed typechecking, with the element type of every
/// quantified variable in pre-order.
struct TypedConstraint {
  Constraint constraint;
  std::vector<VarBinding> bindings;
};

/// Throws UnboundVariable, UnknownTypeInQuantifier, NavigationKindError,
/// UnknownAttribute or AtomTypeMismatch.
TypedConstraint typecheck_constraint(const Constraint& c, const Metamodel& mm);

}  // namespace plift
