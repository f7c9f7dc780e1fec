#include "plift/constraint.hpp"

#include "lexer.hpp"
#include "overloaded.hpp"

namespace plift {

using detail::overloaded;

std::string_view to_string(CmpOp op) {
  switch (op) {
    case CmpOp::Eq: return "=";
    case CmpOp::Ne: return "!=";
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Gt: return ">";
    case CmpOp::Ge: return ">=";
  }
  return "?";
}

ExprRef::ExprRef(Expr expr) : ptr_(std::make_shared<const Expr>(std::move(expr))) {}

bool ExprRef::operator==(const ExprRef& other) const {
  if (ptr_ == other.ptr_) return true;
  if (!ptr_ || !other.ptr_) return false;
  return *ptr_ == *other.ptr_;
}

Navigation nav(std::string var, std::vector<std::string> path) {
  return Navigation{std::move(var), std::move(path)};
}
ExprRef forall(std::string var, SetExpr domain, ExprRef body) {
  return Expr{Quant{Quantifier::ForAll, std::move(var), std::move(domain), std::move(body)}};
}
ExprRef exists(std::string var, SetExpr domain, ExprRef body) {
  return Expr{Quant{Quantifier::Exists, std::move(var), std::move(domain), std::move(body)}};
}
ExprRef negate(ExprRef e) { return Expr{Not{std::move(e)}}; }
ExprRef lor(ExprRef a, ExprRef b) { return Expr{Or{std::move(a), std::move(b)}}; }
ExprRef land(ExprRef a, ExprRef b) { return Expr{And{std::move(a), std::move(b)}}; }
ExprRef implies(ExprRef a, ExprRef b) { return Expr{Implies{std::move(a), std::move(b)}}; }
ExprRef compare(CmpOp op, Term lhs, Term rhs) {
  return Expr{Compare{op, std::move(lhs), std::move(rhs)}};
}
ExprRef predicate(Term term) { return Expr{Predicate{std::move(term)}}; }
ExprRef selected(std::string var) { return Expr{Selected{std::move(var)}}; }

// ---------------------------------------------------------------------------
// Printing

std::string to_string(const Navigation& n) {
  std::string out = n.var;
  for (const auto& step : n.path) out += "." + step;
  return out;
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    if (c == '\t') {
      out += "\\t";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

constexpr int kImplies = 1;
constexpr int kOr = 2;
constexpr int kAnd = 3;
constexpr int kUnary = 4;

// `open_ok` is false when something follows the printed text, in which case
// a quantifier (whose body extends to the right) must be parenthesized.
std::string print(const Expr& e, int min_prec, bool open_ok) {
  auto binary = [&](const char* op, int prec, const ExprRef& l, const ExprRef& r,
                    bool right_assoc) {
    bool paren = prec < min_prec;
    bool open = paren || open_ok;
    std::string text = print(*l, right_assoc ? prec + 1 : prec, false) + " " + op +
                       " " + print(*r, right_assoc ? prec : prec + 1, open);
    return paren ? "(" + text + ")" : text;
  };
  return std::visit(
      overloaded{
          [&](const Compare& c) {
            return to_string(c.lhs) + " " + std::string(to_string(c.op)) + " " +
                   to_string(c.rhs);
          },
          [&](const Predicate& p) { return to_string(p.term); },
          [&](const Selected& s) { return "selected(" + s.var + ")"; },
          [&](const Quant& q) {
            std::string text = std::string(q.kind == Quantifier::ForAll ? "forall " : "exists ") +
                                q.var + " in " + to_string(q.domain) + ": " +
                                print(*q.body, 0, true);
            return open_ok ? text : "(" + text + ")";
          },
          [&](const Not& n) { return "!" + print(*n.operand, kUnary, open_ok); },
          [&](const Or& o) { return binary("||", kOr, o.lhs, o.rhs, false); },
          [&](const And& a) { return binary("&&", kAnd, a.lhs, a.rhs, false); },
          [&](const Implies& i) { return binary("=>", kImplies, i.lhs, i.rhs, true); },
      },
      e.node);
}

}  // namespace

std::string to_string(const Term& t) {
  return std::visit(
      overloaded{[](const Navigation& n) { return to_string(n); },
                 [](const SizeOf& s) { return to_string(s.nav) + ".size"; },
                 [](const IntLit& i) { return std::to_string(i.value); },
                 [](const StringLit& s) { return quote(s.value); },
                 [](const BoolLit& b) { return std::string(b.value ? "true" : "false"); }},
      t);
}

std::string to_string(const SetExpr& s) {
  return std::visit(overloaded{[](const TypeSet& t) { return t.type; },
                               [](const Navigation& n) { return to_string(n); }},
                    s);
}

std::string to_string(const Expr& e) { return print(e, 0, true); }
std::string to_string(const Constraint& c) { return to_string(*c.root); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

using detail::Lexer;
using detail::Tok;

bool is_keyword(const std::string& s) {
  return s == "forall" || s == "exists" || s == "in" || s == "true" || s == "false";
}

class ConstraintParser {
public:
  ConstraintParser(std::string_view text, bool allow_selected)
      : lex_(text), allow_selected_(allow_selected) {}

  Constraint parse() {
    if (!lex_.is("forall") && !lex_.is("exists")) lex_.fail({"'forall'", "'exists'"});
    ExprRef root = quant();
    if (lex_.peek().kind != Tok::End) lex_.fail({"end of input"});
    return Constraint{root};
  }

private:
  ExprRef expr() { return implication(); }

  ExprRef implication() {
    ExprRef lhs = disjunction();
    if (lex_.accept("=>")) return implies(lhs, implication());
    return lhs;
  }

  ExprRef disjunction() {
    ExprRef lhs = conjunction();
    while (lex_.accept("||")) lhs = lor(lhs, conjunction());
    return lhs;
  }

  ExprRef conjunction() {
    ExprRef lhs = unary();
    while (lex_.accept("&&")) lhs = land(lhs, unary());
    return lhs;
  }

  ExprRef unary() {
    if (lex_.accept("!")) return negate(unary());
    if (lex_.is("forall") || lex_.is("exists")) return quant();
    if (lex_.accept("(")) {
      ExprRef inner = expr();
      lex_.expect(")");
      return inner;
    }
    return atom();
  }

  ExprRef quant() {
    bool all = lex_.is("forall");
    lex_.next();
    std::string var = ident("variable");
    lex_.expect("in");
    Navigation path = navigation();
    SetExpr domain = path.path.empty() ? SetExpr{TypeSet{path.var}} : SetExpr{path};
    lex_.expect(":");
    ExprRef body = expr();
    return all ? forall(var, domain, body) : exists(var, domain, body);
  }

  ExprRef atom() {
    if (allow_selected_ && lex_.is("selected")) {
      lex_.next();
      lex_.expect("(");
      std::string var = ident("variable");
      lex_.expect(")");
      return selected(var);
    }
    Term lhs = term();
    static constexpr std::pair<std::string_view, CmpOp> kOps[] = {
        {"=", CmpOp::Eq}, {"!=", CmpOp::Ne}, {"<", CmpOp::Lt},
        {"<=", CmpOp::Le}, {">", CmpOp::Gt}, {">=", CmpOp::Ge}};
    for (const auto& [text, op] : kOps) {
      if (lex_.accept(text)) return compare(op, lhs, term());
    }
    return predicate(lhs);
  }

  Term term() {
    const auto& t = lex_.peek();
    if (t.kind == Tok::Int) {
      auto tok = lex_.next();
      try {
        return IntLit{std::stoll(tok.text)};
      } catch (const std::out_of_range&) {
        throw SyntaxError("integer literal out of range", tok.line, tok.column, {});
      }
    }
    if (t.kind == Tok::String) return StringLit{lex_.next().text};
    if (lex_.accept("true")) return BoolLit{true};
    if (lex_.accept("false")) return BoolLit{false};
    if (t.kind != Tok::Ident) lex_.fail({"term"});
    Navigation n = navigation();
    if (!n.path.empty() && n.path.back() == "size") {
      n.path.pop_back();
      return SizeOf{std::move(n)};
    }
    return n;
  }

  Navigation navigation() {
    Navigation n;
    n.var = ident("identifier");
    while (lex_.accept(".")) n.path.push_back(ident("attribute name"));
    return n;
  }

  std::string ident(const char* what) {
    const auto& t = lex_.peek();
    if (t.kind != Tok::Ident || is_keyword(t.text)) lex_.fail({what});
    return lex_.next().text;
  }

  Lexer lex_;
  bool allow_selected_;
};

}  // namespace

Constraint parse_constraint(std::string_view text, bool allow_selected) {
  return ConstraintParser(text, allow_selected).parse();
}

std::size_t count_type_quantifiers(const Expr& e) {
  return std::visit(
      overloaded{[](const Quant& q) -> std::size_t {
                   return (std::holds_alternative<TypeSet>(q.domain) ? 1 : 0) +
                          count_type_quantifiers(*q.body);
                 },
                 [](const Not& n) { return count_type_quantifiers(*n.operand); },
                 [](const Or& o) {
                   return count_type_quantifiers(*o.lhs) + count_type_quantifiers(*o.rhs);
                 },
                 [](const And& a) {
                   return count_type_quantifiers(*a.lhs) + count_type_quantifiers(*a.rhs);
                 },
                 [](const Implies& i) {
                   return count_type_quantifiers(*i.lhs) + count_type_quantifiers(*i.rhs);
                 },
                 [](const auto&) -> std::size_t { return 0; }},
      e.node);
}

std::size_t count_selected(const Expr& e) {
  return std::visit(
      overloaded{[](const Quant& q) { return count_selected(*q.body); },
                 [](const Not& n) { return count_selected(*n.operand); },
                 [](const Or& o) { return count_selected(*o.lhs) + count_selected(*o.rhs); },
                 [](const And& a) { return count_selected(*a.lhs) + count_selected(*a.rhs); },
                 [](const Implies& i) {
                   return count_selected(*i.lhs) + count_selected(*i.rhs);
                 },
                 [](const Selected&) -> std::size_t { return 1; },
                 [](const auto&) -> std::size_t { return 0; }},
      e.node);
}

}  // namespace plift
