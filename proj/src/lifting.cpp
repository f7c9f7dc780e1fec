#include "plift/lifting.hpp"

#include "overloaded.hpp"

namespace plift {

using detail::overloaded;

ExprRef lift(const Expr& e) {
  return std::visit(
      overloaded{
          [&](const Quant& q) -> ExprRef {
            ExprRef body = lift(*q.body);
            if (std::holds_alternative<TypeSet>(q.domain)) {
              body = q.kind == Quantifier::ForAll ? implies(selected(q.var), body)
                                                  : land(selected(q.var), body);
            }
            return Expr{Quant{q.kind, q.var, q.domain, body}};
          },
          [](const Not& n) { return negate(lift(*n.operand)); },
          [](const Or& o) { return lor(lift(*o.lhs), lift(*o.rhs)); },
          [](const And& a) { return land(lift(*a.lhs), lift(*a.rhs)); },
          [](const Implies& i) { return implies(lift(*i.lhs), lift(*i.rhs)); },
          [&](const auto&) -> ExprRef { return e; },
      },
      e.node);
}

LiftedConstraint lift(const TypedConstraint& c) {
  return LiftedConstraint{lift(*c.constraint.root)};
}

ExprRef strip_guards(const Expr& e) {
  return std::visit(
      overloaded{
          [&](const Quant& q) -> ExprRef {
            const Expr* body = q.body.get();
            if (std::holds_alternative<TypeSet>(q.domain)) {
              auto guarded = [&](const ExprRef& guard, const ExprRef& rest) {
                const auto* s = std::get_if<Selected>(&guard->node);
                if (s != nullptr && s->var == q.var) body = rest.get();
              };
              if (const auto* i = std::get_if<Implies>(&body->node);
                  i != nullptr && q.kind == Quantifier::ForAll)
                guarded(i->lhs, i->rhs);
              else if (const auto* a = std::get_if<And>(&body->node);
                       a != nullptr && q.kind == Quantifier::Exists)
                guarded(a->lhs, a->rhs);
            }
            return Expr{Quant{q.kind, q.var, q.domain, strip_guards(*body)}};
          },
          [](const Not& n) { return negate(strip_guards(*n.operand)); },
          [](const Or& o) { return lor(strip_guards(*o.lhs), strip_guards(*o.rhs)); },
          [](const And& a) { return land(strip_guards(*a.lhs), strip_guards(*a.rhs)); },
          [](const Implies& i) {
            return implies(strip_guards(*i.lhs), strip_guards(*i.rhs));
          },
          [&](const auto&) -> ExprRef { return e; },
      },
      e.node);
}

std::string print_lifted(const LiftedConstraint& lc) { return to_string(*lc.root); }

}  // namespace plift
