#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace plift {

enum class Quantifier { ForAll, Exists };
enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };

std::string_view to_string(CmpOp op);

/// var.step1.step2...; an empty path denotes the variable itself.
struct Navigation {
  std::string var;
  std::vector<std::string> path;
  bool operator==(const Navigation&) const = default;
};

struct SizeOf {
  Navigation nav;
  bool operator==(const SizeOf&) const = default;
};
struct IntLit {
  std::int64_t value;
  bool operator==(const IntLit&) const = default;
};
struct StringLit {
  std::string value;
  bool operator==(const StringLit&) const = default;
};
struct BoolLit {
  bool value;
  bool operator==(const BoolLit&) const = default;
};

using Term = std::variant<Navigation, SizeOf, IntLit, StringLit, BoolLit>;

struct TypeSet {
  std::string type;
  bool operator==(const TypeSet&) const = default;
};

/// Quantifier domain: every object of a type, or a navigated list.
using SetExpr = std::variant<TypeSet, Navigation>;

struct Expr;

/// Shared immutable subtree with deep equality.
class ExprRef {
public:
  ExprRef() = default;
  ExprRef(Expr expr);  // NOLINT(google-explicit-constructor)

  const Expr& operator*() const { return *ptr_; }
  const Expr* operator->() const { return ptr_.get(); }
  const Expr* get() const { return ptr_.get(); }
  explicit operator bool() const { return ptr_ != nullptr; }

  bool operator==(const ExprRef& other) const;

private:
  std::shared_ptr<const Expr> ptr_;
};

struct Compare {
  CmpOp op;
  Term lhs;
  Term rhs;
  bool operator==(const Compare&) const = default;
};

/// A bool-valued term standing alone, e.g. `true` or `p.enabled`.
struct Predicate {
  Term term;
  bool operator==(const Predicate&) const = default;
};

struct Quant {
  Quantifier kind;
  std::string var;
  SetExpr domain;
  ExprRef body;
  bool operator==(const Quant&) const = default;
};

struct Not {
  ExprRef operand;
  bool operator==(const Not&) const = default;
};
struct Or {
  ExprRef lhs, rhs;
  bool operator==(const Or&) const = default;
};
struct And {
  ExprRef lhs, rhs;
  bool operator==(const And&) const = default;
};
struct Implies {
  ExprRef lhs, rhs;
  bool operator==(const Implies&) const = default;
};

/// Presence guard introduced by lifting; never produced by the plain parser.
struct Selected {
  std::string var;
  bool operator==(const Selected&) const = default;
};

struct Expr {
  std::variant<Compare, Predicate, Quant, Not, Or, And, Implies, Selected> node;
  bool operator==(const Expr&) const = default;
};

/// A constraint is rooted at a quantifier.
struct Constraint {
  ExprRef root;
  bool operator==(const Constraint&) const = default;
};

// Builders, mainly for code that assembles ASTs by hand.
Navigation nav(std::string var, std::vector<std::string> path = {});
ExprRef forall(std::string var, SetExpr domain, ExprRef body);
ExprRef exists(std::string var, SetExpr domain, ExprRef body);
ExprRef negate(ExprRef e);
ExprRef lor(ExprRef a, ExprRef b);
ExprRef land(ExprRef a, ExprRef b);
ExprRef implies(ExprRef a, ExprRef b);
ExprRef compare(CmpOp op, Term lhs, Term rhs);
ExprRef predicate(Term term);
ExprRef selected(std::string var);

std::string to_string(const Navigation& n);
std::string to_string(const Term& t);
std::string to_string(const SetExpr& s);
std::string to_string(const Expr& e);
std::string to_string(const Constraint& c);

/// Parses the constraint DSL. With `allow_selected`, `selected(v)` guards are
/// accepted as atoms (the printed form of lifted constraints). Throws
/// SyntaxError.
Constraint parse_constraint(std::string_view text, bool allow_selected = false);

std::size_t count_type_quantifiers(const Expr& e);
std::size_t count_selected(const Expr& e);

}  // namespace plift
