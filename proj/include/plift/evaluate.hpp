#pragma once

#include <functional>

#include "plift/constraint.hpp"
#include "plift/model.hpp"
#include "plift/typecheck.hpp"

namespace plift {

/// Interpretation of `selected(v)` guards. Without one, evaluating a guard
/// throws UnsupportedAtom.
using SelectionFn = std::function<bool(const ObjectId&)>;

/// Direct first-order evaluation over a (bound) instance graph. Type
/// quantifiers range over extents, list quantifiers over navigated lists
/// (empty when the navigation hits NONE). A comparison with a NONE-valued
/// operand is false, except object equality where NONE equals only NONE.
bool evaluate(const TypedConstraint& tc, const Metamodel& mm, const InstanceGraph& g);

/// Same semantics for an arbitrary closed expression, e.g. a lifted one.
bool evaluate_expr(const Expr& e, const Metamodel& mm, const InstanceGraph& g,
                   const SelectionFn& selected = nullptr);

}  // namespace plift
