#include "plift/typecheck.hpp"

#include <algorithm>

#include "overloaded.hpp"

namespace plift {

using detail::overloaded;

std::string to_string(const TermType& t) {
  switch (t.kind) {
    case ValueKind::Int: return "int";
    case ValueKind::Bool: return "bool";
    case ValueKind::String: return "string";
    case ValueKind::Object: return t.cls;
    case ValueKind::List: return "list of " + t.cls;
  }
  return "?";
}

namespace {

TermType type_of(const std::string& type) {
  if (type == "int") return {ValueKind::Int, ""};
  if (type == "bool") return {ValueKind::Bool, ""};
  if (type == "string") return {ValueKind::String, ""};
  return {ValueKind::Object, type};
}

const VarBinding* find_var(const Scope& scope, const std::string& var) {
  auto it = std::find_if(scope.rbegin(), scope.rend(),
                         [&](const VarBinding& b) { return b.var == var; });
  return it == scope.rend() ? nullptr : &*it;
}

}  // namespace

NavigationInfo resolve_navigation(const Metamodel& mm, const Scope& scope,
                                  const Navigation& n) {
  const VarBinding* binding = find_var(scope, n.var);
  if (binding == nullptr)
    throw Error(ErrorKind::UnboundVariable, "unbound variable '" + n.var + "'");

  NavigationInfo info;
  std::string current = binding->type;
  for (std::size_t i = 0; i < n.path.size(); ++i) {
    const std::string& step = n.path[i];
    if (is_basic_type(current))
      throw Error(ErrorKind::NavigationKindError,
                  to_string(n) + ": cannot apply '." + step + "' to a " + current + " value");
    const Attribute& attr = lookup_attribute(mm, current, step);
    info.owner_types.push_back(current);
    if (attr.many()) {
      if (i + 1 != n.path.size())
        throw Error(ErrorKind::NavigationKindError,
                    to_string(n) + ": navigation may not continue through list '" +
                        step + "'");
      info.result = {ValueKind::List, attr.type};
      return info;
    }
    current = attr.type;
  }
  info.result = type_of(current);
  return info;
}

TermType term_type(const Metamodel& mm, const Scope& scope, const Term& t) {
  return std::visit(
      overloaded{
          [&](const Navigation& n) { return resolve_navigation(mm, scope, n).result; },
          [&](const SizeOf& s) {
            auto info = resolve_navigation(mm, scope, s.nav);
            if (info.result.kind != ValueKind::List)
              throw Error(ErrorKind::NavigationKindError,
                          to_string(s.nav) + ".size: not a list");
            return TermType{ValueKind::Int, ""};
          },
          [](const IntLit&) { return TermType{ValueKind::Int, ""}; },
          [](const StringLit&) { return TermType{ValueKind::String, ""}; },
          [](const BoolLit&) { return TermType{ValueKind::Bool, ""}; },
      },
      t);
}

namespace {

class Checker {
public:
  explicit Checker(const Metamodel& mm) : mm_(mm) {}

  void check(const Expr& e) {
    std::visit(overloaded{
                   [&](const Compare& c) { compare(c); },
                   [&](const Predicate& p) {
                     auto t = term_type(mm_, scope_, p.term);
                     if (t.kind != ValueKind::Bool)
                       throw Error(ErrorKind::AtomTypeMismatch,
                                   to_string(p.term) + ": expected bool, found " +
                                       to_string(t));
                   },
                   [&](const Selected& s) {
                     if (std::none_of(scope_.begin(), scope_.end(),
                                      [&](const VarBinding& b) { return b.var == s.var; }))
                       throw Error(ErrorKind::UnboundVariable,
                                   "unbound variable '" + s.var + "'");
                   },
                   [&](const Quant& q) { quant(q); },
                   [&](const Not& n) { check(*n.operand); },
                   [&](const Or& o) {
                     check(*o.lhs);
                     check(*o.rhs);
                   },
                   [&](const And& a) {
                     check(*a.lhs);
                     check(*a.rhs);
                   },
                   [&](const Implies& i) {
                     check(*i.lhs);
                     check(*i.rhs);
                   },
               },
               e.node);
  }

  std::vector<VarBinding> bindings;

private:
  void compare(const Compare& c) {
    auto lhs = term_type(mm_, scope_, c.lhs);
    auto rhs = term_type(mm_, scope_, c.rhs);
    auto mismatch = [&](const std::string& why) {
      return Error(ErrorKind::AtomTypeMismatch,
                   to_string(c.lhs) + " " + std::string(to_string(c.op)) + " " +
                       to_string(c.rhs) + ": " + why);
    };
    if (lhs.kind == ValueKind::List || rhs.kind == ValueKind::List)
      throw mismatch("lists cannot be compared (use .size)");
    if (lhs != rhs) throw mismatch(to_string(lhs) + " vs " + to_string(rhs));
    bool ordering = c.op != CmpOp::Eq && c.op != CmpOp::Ne;
    if (ordering && lhs.kind != ValueKind::Int)
      throw mismatch("ordering requires int operands, found " + to_string(lhs));
  }

  void quant(const Quant& q) {
    std::string element = std::visit(
        overloaded{
            [&](const TypeSet& t) {
              if (is_basic_type(t.type) || !mm_.has_class(t.type))
                throw Error(ErrorKind::UnknownTypeInQuantifier,
                            "cannot quantify over '" + t.type + "'");
              return t.type;
            },
            [&](const Navigation& n) {
              auto info = resolve_navigation(mm_, scope_, n);
              if (info.result.kind != ValueKind::List)
                throw Error(ErrorKind::NavigationKindError,
                            "quantifier domain " + to_string(n) + " is not a list");
              return info.result.cls;
            },
        },
        q.domain);
    scope_.push_back({q.var, element});
    bindings.push_back({q.var, element});
    check(*q.body);
    scope_.pop_back();
  }

  const Metamodel& mm_;
  Scope scope_;
};

}  // namespace

TypedConstraint typecheck_constraint(const Constraint& c, const Metamodel& mm) {
  if (!c.root || !std::holds_alternative<Quant>(c.root->node))
    throw Error(ErrorKind::SyntaxError, "a constraint must start with a quantifier");
  Checker checker(mm);
  checker.check(*c.root);
  return TypedConstraint{c, std::move(checker.bindings)};
}

}  // namespace plift
