#include "plift/evaluate.hpp"

#include <algorithm>
#include <unordered_map>

#include "overloaded.hpp"

namespace plift {

using detail::overloaded;

namespace {

class Evaluator {
public:
  Evaluator(const Metamodel& mm, const InstanceGraph& g, const SelectionFn& selected)
      : mm_(mm), g_(g), selected_(selected) {
    for (const auto& o : g.objects()) extents_[o.type].push_back(o.id);
  }

  bool eval(const Expr& e) {
    return std::visit(
        overloaded{
            [&](const Compare& c) { return compare(c); },
            [&](const Predicate& p) {
              Value v = term(p.term);
              const bool* b = std::get_if<bool>(&v);
              return b != nullptr && *b;
            },
            [&](const Selected& s) {
              if (!selected_)
                throw Error(ErrorKind::UnsupportedAtom,
                            "selected(" + s.var + ") needs a presence interpretation");
              return selected_(lookup(s.var));
            },
            [&](const Quant& q) { return quant(q); },
            [&](const Not& n) { return !eval(*n.operand); },
            [&](const Or& o) { return eval(*o.lhs) || eval(*o.rhs); },
            [&](const And& a) { return eval(*a.lhs) && eval(*a.rhs); },
            [&](const Implies& i) { return !eval(*i.lhs) || eval(*i.rhs); },
        },
        e.node);
  }

private:
  const ObjectId& lookup(const std::string& var) const {
    for (auto it = env_.rbegin(); it != env_.rend(); ++it)
      if (it->first == var) return it->second;
    throw Error(ErrorKind::UnboundVariable, "unbound variable '" + var + "'");
  }

  Value term(const Term& t) {
    return std::visit(
        overloaded{
            [&](const Navigation& n) { return navigate(g_, lookup(n.var), n.path); },
            [&](const SizeOf& s) -> Value {
              Value v = navigate(g_, lookup(s.nav.var), s.nav.path);
              if (const auto* list = std::get_if<ObjectList>(&v))
                return static_cast<std::int64_t>(list->items.size());
              return Ref::none();
            },
            [](const IntLit& i) -> Value { return i.value; },
            [](const StringLit& s) -> Value { return s.value; },
            [](const BoolLit& b) -> Value { return b.value; },
        },
        t);
  }

  bool compare(const Compare& c) {
    Value lhs = term(c.lhs);
    Value rhs = term(c.rhs);
    const auto* lref = std::get_if<Ref>(&lhs);
    const auto* rref = std::get_if<Ref>(&rhs);
    if (lref != nullptr && rref != nullptr) {
      // two NONEs from primitive slots of absent objects
      if (!object_typed(c)) return false;
      if (c.op == CmpOp::Eq) return *lref == *rref;
      if (c.op == CmpOp::Ne) return !(*lref == *rref);
      return false;
    }
    if (lref != nullptr || rref != nullptr) return false;
    if (lhs.index() != rhs.index()) return false;
    if (const auto* l = std::get_if<std::int64_t>(&lhs)) {
      std::int64_t r = std::get<std::int64_t>(rhs);
      switch (c.op) {
        case CmpOp::Eq: return *l == r;
        case CmpOp::Ne: return *l != r;
        case CmpOp::Lt: return *l < r;
        case CmpOp::Le: return *l <= r;
        case CmpOp::Gt: return *l > r;
        case CmpOp::Ge: return *l >= r;
      }
    }
    bool equal = lhs == rhs;
    if (c.op == CmpOp::Eq) return equal;
    if (c.op == CmpOp::Ne) return !equal;
    return false;
  }

  // Static kind of a comparison, from the classes of the bound variables.
  bool object_typed(const Compare& c) {
    auto [it, fresh] = object_cmp_.try_emplace(&c, false);
    if (fresh) {
      Scope scope;
      for (const auto& [var, id] : env_) scope.push_back({var, g_.find(id)->type});
      it->second = term_type(mm_, scope, c.lhs).kind == ValueKind::Object;
    }
    return it->second;
  }

  bool quant(const Quant& q) {
    std::vector<ObjectId> navigated;
    const std::vector<ObjectId>* domain = &navigated;
    if (const auto* t = std::get_if<TypeSet>(&q.domain)) {
      auto it = extents_.find(t->type);
      if (it != extents_.end()) domain = &it->second;
    } else {
      const auto& n = std::get<Navigation>(q.domain);
      Value v = navigate(g_, lookup(n.var), n.path);
      if (auto* list = std::get_if<ObjectList>(&v)) navigated = std::move(list->items);
    }
    bool universal = q.kind == Quantifier::ForAll;
    for (const auto& id : *domain) {
      env_.emplace_back(q.var, id);
      bool value = eval(*q.body);
      env_.pop_back();
      if (universal && !value) return false;
      if (!universal && value) return true;
    }
    return universal;
  }

  const Metamodel& mm_;
  const InstanceGraph& g_;
  const SelectionFn& selected_;
  std::unordered_map<const Compare*, bool> object_cmp_;
  std::unordered_map<std::string, std::vector<ObjectId>> extents_;
  std::vector<std::pair<std::string, ObjectId>> env_;
};

}  // namespace

bool evaluate(const TypedConstraint& tc, const Metamodel& mm, const InstanceGraph& g) {
  return evaluate_expr(*tc.constraint.root, mm, g);
}

bool evaluate_expr(const Expr& e, const Metamodel& mm, const InstanceGraph& g, const SelectionFn& selected) {
  return Evaluator(mm, g, selected).eval(e);
}

}  // namespace plift
