#include "plift/smt.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>

#include "overloaded.hpp"

namespace plift {

using detail::overloaded;

namespace {

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> words = {
      "true",   "false",  "and",    "or",     "not",      "xor",     "=>",
      "ite",    "distinct", "let",  "forall", "exists",   "match",   "as",
      "par",    "_",      "!",      "Int",    "Bool",     "String",  "Real",
      "Seq",    "Array",  "RegLan", "RegEx",  "Unicode",  "abs",     "div",
      "mod",    "select", "store",  "const",  "to_real",  "to_int",  "is_int",
      "assert", "model",  "define-fun", "declare-fun", "declare-const",
      "declare-datatypes", "check-sat", "get-model", "NUMERAL", "DECIMAL",
      "STRING", "BINARY", "HEXADECIMAL", "lambda", "min", "max"};
  return words;
}

std::string int_literal(std::int64_t v) {
  if (v >= 0) return std::to_string(v);
  auto magnitude = static_cast<std::uint64_t>(-(v + 1)) + 1;
  return "(- " + std::to_string(magnitude) + ")";
}

std::string none_of(const std::string& cls) { return "NONE_" + cls; }
std::string selector(const std::string& cls) { return "selected_" + cls; }
std::string slot_fun(const std::string& cls, const std::string& attr) {
  return cls + "_" + attr;
}

std::string sort_of(const Attribute& attr) {
  std::string base = attr.type == "int"      ? "Int"
                     : attr.type == "bool"   ? "Bool"
                     : attr.type == "string" ? "String"
                                             : attr.type;
  return attr.many() ? "(Seq " + base + ")" : base;
}

std::string default_value(const Attribute& attr) {
  if (attr.many()) return "(as seq.empty (Seq " + attr.type + "))";
  if (attr.type == "int") return "0";
  if (attr.type == "bool") return "false";
  if (attr.type == "string") return "\"\"";
  return none_of(attr.type);
}

class Emitter {
public:
  Emitter(const ProductLine& pl, const SmtOptions& options) : pl_(pl), options_(options) {}

  SmtScript run(const LiftedConstraint& lc) {
    collect_symbols();
    decide_list_encoding();
    collect_used(*lc.root);
    begin("preamble");
    add("(set-option :produce-models true)");
    begin("features");
    for (auto& c : emit_feature_block(pl_.feature_model)) add(std::move(c));
    begin("datatypes");
    datatypes();
    begin("selection");
    selection();
    begin("slots");
    slots();
    begin("constraint");
    add("(assert (not " + constraint(*lc.root) + "))");
    begin("check");
    add("(check-sat)");
    add("(get-model)");
    return std::move(script_);
  }

private:
  void begin(std::string name) {
    script_.sections.emplace_back(std::move(name), script_.commands.size());
  }
  void add(std::string command) { script_.commands.push_back(std::move(command)); }

  void claim(const std::string& symbol, const std::string& what) {
    if (reserved_words().count(symbol) != 0)
      throw Error(ErrorKind::SymbolClash,
                  what + " '" + symbol + "' collides with an SMT-LIB reserved word");
    auto [it, fresh] = globals_.emplace(symbol, what);
    if (!fresh)
      throw Error(ErrorKind::SymbolClash, what + " '" + symbol + "' collides with " +
                                              it->second + " of the same name");
  }

  void collect_symbols() {
    for (const auto& f : pl_.feature_model.features) claim(f, "feature");
    for (const auto& [cls, body] : pl_.metamodel.classes()) {
      claim(cls, "class");
      claim(none_of(cls), "NONE element");
      claim(selector(cls), "selection function");
      for (const auto& [attr, a] : body.attributes())
        claim(slot_fun(cls, attr), "attribute function");
      objects_[cls];
    }
    for (const auto& o : pl_.model.objects()) {
      claim(o.id, "object");
      objects_[o.type].push_back(&o);
    }
  }

  void datatypes() {
    for (const auto& [cls, body] : pl_.metamodel.classes()) {
      std::string decl = "(declare-datatypes () ((" + cls;
      for (const auto* o : objects_[cls]) decl += " " + o->id;
      decl += " " + none_of(cls) + ")))";
      add(std::move(decl));
    }
  }

  void selection() {
    for (const auto& [cls, body] : pl_.metamodel.classes()) {
      add("(declare-fun " + selector(cls) + " (" + cls + ") Bool)");
      for (const auto* o : objects_[cls])
        add("(assert (= (" + selector(cls) + " " + o->id + ") " +
            smt_formula(pl_.presence.condition(o->id)) + "))");
      add("(assert (= (" + selector(cls) + " " + none_of(cls) + ") false))");
    }
  }

  std::string bound_ref(const std::string& cls, const ObjectId& target) const {
    return "(ite (" + selector(cls) + " " + target + ") " + target + " " + none_of(cls) + ")";
  }

  std::string value_term(const Attribute& attr, const Value& value) const {
    return std::visit(
        overloaded{
            [](bool b) -> std::string { return b ? "true" : "false"; },
            [](std::int64_t i) { return int_literal(i); },
            [](const std::string& s) { return smt_string_literal(s); },
            [&](const Ref& r) {
              return r.is_none() ? none_of(attr.type) : bound_ref(attr.type, *r.target);
            },
            [&](const ObjectList& l) {
              std::string empty = "(as seq.empty (Seq " + attr.type + "))";
              auto unit = [&](const ObjectId& id) {
                return "(ite (" + selector(attr.type) + " " + id + ") (seq.unit " + id + ") " +
                       empty + ")";
              };
              if (l.items.empty()) return empty;
              if (l.items.size() == 1) return unit(l.items.front());
              std::string out = "(seq.++";
              for (const auto& id : l.items) out += " " + unit(id);
              return out + ")";
            },
        },
        value);
  }

  void note(const Navigation& n) {
    auto info = resolve_navigation(pl_.metamodel, scope_, n);
    for (std::size_t i = 0; i < n.path.size(); ++i) used_.emplace(info.owner_types[i], n.path[i]);
  }

  void note(const Term& t) {
    if (const auto* n = std::get_if<Navigation>(&t)) note(*n);
    if (const auto* z = std::get_if<SizeOf>(&t)) note(z->nav);
  }

  // Slot functions the constraint can reach; the others are unconstrained
  // definitions and only slow the solver down.
  void collect_used(const Expr& e) {
    std::visit(overloaded{
                   [&](const Compare& c) {
                     note(c.lhs);
                     note(c.rhs);
                   },
                   [&](const Predicate& p) { note(p.term); },
                   [](const Selected&) {},
                   [&](const Quant& q) {
                     std::string element;
                     if (const auto* t = std::get_if<TypeSet>(&q.domain)) {
                       element = t->type;
                     } else {
                       const auto& n = std::get<Navigation>(q.domain);
                       note(n);
                       element = resolve_navigation(pl_.metamodel, scope_, n).result.cls;
                     }
                     scope_.push_back({q.var, element});
                     collect_used(*q.body);
                     scope_.pop_back();
                   },
                   [&](const Not& n) { collect_used(*n.operand); },
                   [&](const Or& o) {
                     collect_used(*o.lhs);
                     collect_used(*o.rhs);
                   },
                   [&](const And& a) {
                     collect_used(*a.lhs);
                     collect_used(*a.rhs);
                   },
                   [&](const Implies& i) {
                     collect_used(*i.lhs);
                     collect_used(*i.rhs);
                   },
               },
               e.node);
  }

  bool wanted(const std::string& cls, const std::string& attr) const {
    return options_.all_slots || used_.count({cls, attr}) != 0;
  }

  // Constraints observe a list only through membership and size. Outside
  // Concat mode both go through defined functions; quantified seq.contains
  // sends z3 into long searches even on tiny models. Short lists keep
  // their Seq slot as well.
  bool by_membership(const std::string& cls, const std::string& attr) const {
    return membership_.count({cls, attr}) != 0;
  }
  bool as_sequence(const std::string& cls, const std::string& attr) const {
    return sequence_.count({cls, attr}) != 0;
  }
  bool declared(const std::string& cls, const std::string& attr, const Attribute& a) const {
    return wanted(cls, attr) && (!a.many() || as_sequence(cls, attr));
  }

  void decide_list_encoding() {
    for (const auto& [cls, body] : pl_.metamodel.classes())
      for (const auto& [attr, a] : body.attributes()) {
        if (!a.many()) continue;
        std::size_t longest = 0;
        for (const auto* o : objects_[cls])
          longest = std::max(longest, std::get<ObjectList>(*o->slot(attr)).items.size());
        const bool seq = options_.lists == ListEncoding::Concat ||
                         (options_.lists == ListEncoding::Auto && longest <= options_.concat_limit);
        if (seq) sequence_.emplace(cls, attr);
        if (options_.lists != ListEncoding::Concat) {
          membership_.emplace(cls, attr);
          claim(member_fun(cls, attr), "membership function");
          claim(size_fun(cls, attr), "size function");
        }
      }
  }

  static std::string member_fun(const std::string& cls, const std::string& attr) {
    return slot_fun(cls, attr) + "_has";
  }
  static std::string size_fun(const std::string& cls, const std::string& attr) {
    return slot_fun(cls, attr) + "_size";
  }

  void membership_defs(const std::string& cls, const std::string& attr, const std::string& elem) {
    const std::string o = bind_var("o"), x = bind_var("x");
    std::string members = "false", size = "0";
    const auto& owners = objects_[cls];
    for (auto it = owners.rbegin(); it != owners.rend(); ++it) {
      const auto& items = std::get<ObjectList>(*(*it)->slot(attr)).items;
      std::string any, count;
      for (const auto& id : items) {
        any += " (and (" + selector(elem) + " " + id + ") (= " + x + " " + id + "))";
        count += " (ite (" + selector(elem) + " " + id + ") 1 0)";
      }
      if (items.empty()) {
        any = "false";
        count = "0";
      } else if (items.size() == 1) {
        any = any.substr(1);
        count = count.substr(1);
      } else {
        any = "(or" + any + ")";
        count = "(+" + count + ")";
      }
      const std::string is = "(= " + o + " " + (*it)->id + ")";
      members = "(ite " + is + " " + any + " " + members + ")";
      size = "(ite " + is + " " + count + " " + size + ")";
    }
    add("(define-fun " + member_fun(cls, attr) + " ((" + o + " " + cls + ") (" + x + " " + elem +
        ")) Bool " + members + ")");
    add("(define-fun " + size_fun(cls, attr) + " ((" + o + " " + cls + ")) Int " + size + ")");
  }

  void slots() {
    for (const auto& [cls, body] : pl_.metamodel.classes()) {
      for (const auto& [attr, a] : body.attributes())
        if (declared(cls, attr, a))
          add("(declare-fun " + slot_fun(cls, attr) + " (" + cls + ") " + sort_of(a) + ")");
      for (const auto* o : objects_[cls])
        for (const auto& [attr, a] : body.attributes())
          if (declared(cls, attr, a))
            add("(assert (= (" + slot_fun(cls, attr) + " " + o->id + ") " +
                value_term(a, *o->slot(attr)) + "))");
      for (const auto& [attr, a] : body.attributes())
        if (declared(cls, attr, a))
          add("(assert (= (" + slot_fun(cls, attr) + " " + none_of(cls) + ") " +
              default_value(a) + "))");
      for (const auto& [attr, a] : body.attributes())
        if (wanted(cls, attr) && by_membership(cls, attr)) membership_defs(cls, attr, a.type);
    }
  }

  // -- constraint translation ----------------------------------------------

  // Fresh against globals and every enclosing binder, so a domain term that
  // mentions an outer variable of the same name is never captured.
  std::string bind_var(const std::string& var) const {
    auto taken = [&](const std::string& name) {
      if (globals_.count(name) != 0 || reserved_words().count(name) != 0) return true;
      for (const auto& [src, smt] : names_)
        if (smt == name) return true;
      return false;
    };
    std::string name = var;
    for (int n = 1; taken(name); ++n) name = var + "_" + std::to_string(n);
    return name;
  }

  const std::string& smt_var(const std::string& var) const {
    for (auto it = names_.rbegin(); it != names_.rend(); ++it)
      if (it->first == var) return it->second;
    throw Error(ErrorKind::UnboundVariable, "unbound variable '" + var + "'");
  }

  const std::string& var_type(const std::string& var) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->var == var) return it->type;
    throw Error(ErrorKind::UnboundVariable, "unbound variable '" + var + "'");
  }

  // Term for the first `steps` steps of the navigation.
  std::string nav_term(const Navigation& n, const NavigationInfo& info,
                       std::size_t steps) const {
    std::string term = smt_var(n.var);
    for (std::size_t i = 0; i < steps; ++i)
      term = "(" + slot_fun(info.owner_types[i], n.path[i]) + " " + term + ")";
    return term;
  }

  // Intermediate objects that must exist for a basic-valued navigation to
  // have a value.
  void present_prefixes(const Navigation& n, std::vector<std::string>& out) const {
    auto info = resolve_navigation(pl_.metamodel, scope_, n);
    for (std::size_t i = 1; i < n.path.size(); ++i)
      out.push_back("(not (= " + nav_term(n, info, i) + " " + none_of(info.owner_types[i]) +
                    "))");
  }

  std::string term(const Term& t) const {
    return std::visit(
        overloaded{
            [&](const Navigation& n) {
              auto info = resolve_navigation(pl_.metamodel, scope_, n);
              return nav_term(n, info, n.path.size());
            },
            [&](const SizeOf& s) {
              auto info = resolve_navigation(pl_.metamodel, scope_, s.nav);
              const std::size_t last = s.nav.path.size() - 1;
              if (by_membership(info.owner_types[last], s.nav.path[last]))
                return "(" + size_fun(info.owner_types[last], s.nav.path[last]) + " " +
                       nav_term(s.nav, info, last) + ")";
              return "(seq.len " + nav_term(s.nav, info, s.nav.path.size()) + ")";
            },
            [](const IntLit& i) { return int_literal(i.value); },
            [](const StringLit& s) { return smt_string_literal(s.value); },
            [](const BoolLit& b) { return std::string(b.value ? "true" : "false"); },
        },
        t);
  }

  // Navigations whose intermediate objects must exist (empty for literals).
  void term_guards(const Term& t, std::vector<std::string>& out) const {
    if (const auto* n = std::get_if<Navigation>(&t)) present_prefixes(*n, out);
    if (const auto* s = std::get_if<SizeOf>(&t)) present_prefixes(s->nav, out);
  }

  static std::string conjoin(const std::vector<std::string>& guards, std::string atom) {
    if (guards.empty()) return atom;
    std::string out = "(and";
    for (const auto& g : guards) out += " " + g;
    return out + " " + atom + ")";
  }

  std::string compare(const Compare& c) const {
    TermType type = term_type(pl_.metamodel, scope_, c.lhs);
    if (type.kind == ValueKind::List)
      throw Error(ErrorKind::UnsupportedAtom, "list-valued comparison operand");
    std::string lhs = term(c.lhs), rhs = term(c.rhs);
    std::string atom;
    switch (c.op) {
      case CmpOp::Eq: atom = "(= " + lhs + " " + rhs + ")"; break;
      case CmpOp::Ne: atom = "(not (= " + lhs + " " + rhs + "))"; break;
      case CmpOp::Lt: atom = "(< " + lhs + " " + rhs + ")"; break;
      case CmpOp::Le: atom = "(<= " + lhs + " " + rhs + ")"; break;
      case CmpOp::Gt: atom = "(> " + lhs + " " + rhs + ")"; break;
      case CmpOp::Ge: atom = "(>= " + lhs + " " + rhs + ")"; break;
    }
    if (type.kind != ValueKind::Int && c.op != CmpOp::Eq && c.op != CmpOp::Ne)
      throw Error(ErrorKind::UnsupportedAtom,
                  "ordering on " + to_string(type) + " operands is not supported");
    // Object equality is total: NONE is a proper element of every class.
    if (type.kind == ValueKind::Object) return atom;
    std::vector<std::string> guards;
    term_guards(c.lhs, guards);
    term_guards(c.rhs, guards);
    return conjoin(guards, atom);
  }

  std::string expr(const Expr& e) {
    return std::visit(
        overloaded{
            [&](const Compare& c) { return compare(c); },
            [&](const Predicate& p) {
              if (term_type(pl_.metamodel, scope_, p.term).kind != ValueKind::Bool)
                throw Error(ErrorKind::UnsupportedAtom,
                            "non-boolean predicate " + to_string(p.term));
              std::vector<std::string> guards;
              term_guards(p.term, guards);
              return conjoin(guards, term(p.term));
            },
            [&](const Selected& s) {
              return "(" + selector(var_type(s.var)) + " " + smt_var(s.var) + ")";
            },
            [&](const Quant& q) { return quant(q); },
            [&](const Not& n) { return "(not " + expr(*n.operand) + ")"; },
            [&](const Or& o) { return "(or " + expr(*o.lhs) + " " + expr(*o.rhs) + ")"; },
            [&](const And& a) { return "(and " + expr(*a.lhs) + " " + expr(*a.rhs) + ")"; },
            [&](const Implies& i) {
              return "(=> " + expr(*i.lhs) + " " + expr(*i.rhs) + ")";
            },
        },
        e.node);
  }

  struct TooLarge {};

  std::string constraint(const Expr& root) {
    if (options_.quantifiers != QuantifierEncoding::Native) {
      expand_ = true;
      budget_ = options_.quantifiers == QuantifierEncoding::Expand
                    ? std::numeric_limits<std::size_t>::max()
                    : options_.expansion_limit;
      try {
        return expr(root);
      } catch (const TooLarge&) {
        scope_.clear();
        names_.clear();
      }
    }
    expand_ = false;
    return expr(root);
  }

  // Body guarded by selected(var), so NONE contributes nothing.
  static bool guarded(const Quant& q) {
    const Expr& b = *q.body;
    const Expr* lhs = nullptr;
    if (const auto* i = std::get_if<Implies>(&b.node)) lhs = i->lhs.get();
    if (const auto* a = std::get_if<And>(&b.node)) lhs = a->lhs.get();
    const auto* s = lhs ? std::get_if<Selected>(&lhs->node) : nullptr;
    return s != nullptr && s->var == q.var;
  }

  const ModelObject* constant_object(const std::string& term) const {
    return pl_.model.find(term);
  }

  std::string expanded(const Quant& q) {
    const bool all = q.kind == Quantifier::ForAll;
    std::string element;
    std::vector<std::string> candidates;
    std::function<std::string(const std::string&)> member;
    if (const auto* t = std::get_if<TypeSet>(&q.domain)) {
      element = t->type;
      for (const auto* o : objects_[element]) candidates.push_back(o->id);
      if (!guarded(q)) candidates.push_back(none_of(element));
    } else {
      const auto& n = std::get<Navigation>(q.domain);
      auto info = resolve_navigation(pl_.metamodel, scope_, n);
      element = info.result.cls;
      const std::size_t last = n.path.size() - 1;
      const std::string& cls = info.owner_types[last];
      const std::string& attr = n.path[last];
      std::string owner = nav_term(n, info, last);
      std::set<std::string> seen;
      auto take = [&](const ModelObject& o) {
        for (const auto& id : std::get<ObjectList>(*o.slot(attr)).items)
          if (seen.insert(id).second) candidates.push_back(id);
      };
      if (const ModelObject* o = constant_object(owner); o != nullptr && o->type == cls)
        take(*o);
      else if (owner != none_of(cls))
        for (const auto* o : objects_[cls]) take(*o);
      if (by_membership(cls, attr)) {
        std::string f = member_fun(cls, attr);
        member = [f, owner](const std::string& v) { return "(" + f + " " + owner + " " + v + ")"; };
      } else {
        std::string list = nav_term(n, info, n.path.size());
        member = [list](const std::string& v) {
          return "(seq.contains " + list + " (seq.unit " + v + "))";
        };
      }
    }
    std::vector<std::string> parts;
    for (const auto& c : candidates) {
      if (budget_ == 0) throw TooLarge{};
      --budget_;
      scope_.push_back({q.var, element});
      names_.emplace_back(q.var, c);
      std::string body = expr(*q.body);
      scope_.pop_back();
      names_.pop_back();
      if (member) body = "(" + std::string(all ? "=> " : "and ") + member(c) + " " + body + ")";
      parts.push_back(std::move(body));
    }
    if (parts.empty()) return all ? "true" : "false";
    if (parts.size() == 1) return parts.front();
    std::string out = all ? "(and" : "(or";
    for (const auto& p : parts) out += " " + p;
    return out + ")";
  }

  std::string quant(const Quant& q) {
    if (expand_) return expanded(q);
    const bool all = q.kind == Quantifier::ForAll;
    std::string element;
    std::function<std::string(const std::string&)> member;
    if (const auto* t = std::get_if<TypeSet>(&q.domain)) {
      element = t->type;
    } else {
      const auto& n = std::get<Navigation>(q.domain);
      auto info = resolve_navigation(pl_.metamodel, scope_, n);
      if (info.result.kind != ValueKind::List)
        throw Error(ErrorKind::NavigationKindError, to_string(n) + " is not a list");
      element = info.result.cls;
      const std::size_t last = n.path.size() - 1;
      if (by_membership(info.owner_types[last], n.path[last])) {
        std::string f = member_fun(info.owner_types[last], n.path[last]);
        std::string owner = nav_term(n, info, last);
        member = [f, owner](const std::string& v) { return "(" + f + " " + owner + " " + v + ")"; };
      } else {
        std::string list = nav_term(n, info, n.path.size());
        member = [list](const std::string& v) {
          return "(seq.contains " + list + " (seq.unit " + v + "))";
        };
      }
    }
    std::string name = bind_var(q.var);
    scope_.push_back({q.var, element});
    names_.emplace_back(q.var, name);
    std::string body = expr(*q.body);
    scope_.pop_back();
    names_.pop_back();
    if (member) {
      std::string in = member(name);
      body = all ? "(=> " + in + " " + body + ")" : "(and " + in + " " + body + ")";
    }
    return std::string(all ? "(forall ((" : "(exists ((") + name + " " + element + ")) " +
           body + ")";
  }

  const ProductLine& pl_;
  SmtOptions options_;
  std::set<std::pair<std::string, std::string>> used_;
  std::set<std::pair<std::string, std::string>> membership_, sequence_;
  bool expand_ = false;
  std::size_t budget_ = 0;
  SmtScript script_;
  std::map<std::string, std::string> globals_;
  std::map<std::string, std::vector<const ModelObject*>> objects_;
  Scope scope_;
  std::vector<std::pair<std::string, std::string>> names_;
};

}  // namespace

std::vector<std::string> SmtScript::section(const std::string& name) const {
  for (std::size_t i = 0; i < sections.size(); ++i) {
    if (sections[i].first != name) continue;
    std::size_t end = i + 1 < sections.size() ? sections[i + 1].second : commands.size();
    return {commands.begin() + static_cast<std::ptrdiff_t>(sections[i].second),
            commands.begin() + static_cast<std::ptrdiff_t>(end)};
  }
  return {};
}

std::string SmtScript::text() const {
  std::string out;
  std::size_t next = 0;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    while (next < sections.size() && sections[next].second == i) {
      out += "; " + sections[next].first + "\n";
      ++next;
    }
    out += commands[i] + "\n";
  }
  return out;
}

std::string smt_formula(const PropFormula& f) {
  return std::visit(
      overloaded{[](const FeatVar& v) { return v.name; },
                 [](const PropConst& c) { return std::string(c.value ? "true" : "false"); },
                 [](const PropNot& n) { return "(not " + smt_formula(n.operand) + ")"; },
                 [](const PropAnd& a) {
                   return "(and " + smt_formula(a.lhs) + " " + smt_formula(a.rhs) + ")";
                 },
                 [](const PropOr& o) {
                   return "(or " + smt_formula(o.lhs) + " " + smt_formula(o.rhs) + ")";
                 },
                 [](const PropImplies& i) {
                   return "(=> " + smt_formula(i.lhs) + " " + smt_formula(i.rhs) + ")";
                 }},
      f.node().node);
}

std::vector<std::string> emit_feature_block(const FeatureModel& fm) {
  std::vector<std::string> out;
  for (const auto& f : fm.features) out.push_back("(declare-const " + f + " Bool)");
  for (const auto& c : conjuncts(fm.formula)) {
    // A bare feature conjunct states that the feature is always selected.
    if (const auto* v = std::get_if<FeatVar>(&c.node().node))
      out.push_back("(assert (= " + v->name + " true))");
    else
      out.push_back("(assert " + smt_formula(c) + ")");
  }
  return out;
}

std::string smt_string_literal(const std::string& s) {
  std::string out = "\"";
  for (std::size_t i = 0; i < s.size();) {
    auto c = static_cast<unsigned char>(s[i]);
    unsigned code = c;
    std::size_t len = 1;
    if (c >= 0xF0 && i + 3 < s.size()) {
      code = ((c & 0x07U) << 18) | ((static_cast<unsigned char>(s[i + 1]) & 0x3FU) << 12) |
             ((static_cast<unsigned char>(s[i + 2]) & 0x3FU) << 6) |
             (static_cast<unsigned char>(s[i + 3]) & 0x3FU);
      len = 4;
    } else if (c >= 0xE0 && i + 2 < s.size()) {
      code = ((c & 0x0FU) << 12) | ((static_cast<unsigned char>(s[i + 1]) & 0x3FU) << 6) |
             (static_cast<unsigned char>(s[i + 2]) & 0x3FU);
      len = 3;
    } else if (c >= 0xC0 && i + 1 < s.size()) {
      code = ((c & 0x1FU) << 6) | (static_cast<unsigned char>(s[i + 1]) & 0x3FU);
      len = 2;
    }
    i += len;
    if (code == '"') {
      out += "\"\"";
    } else if (code >= 32 && code < 127 && code != '\\') {
      out += static_cast<char>(code);
    } else {
      static const char* hex = "0123456789abcdef";
      std::string digits;
      for (unsigned v = code; v != 0 || digits.empty(); v >>= 4) digits.insert(digits.begin(), hex[v & 0xF]);
      out += "\\u{" + digits + "}";
    }
  }
  return out + "\"";
}

SmtScript emit_smt(const ProductLine& pl, const LiftedConstraint& lc, const SmtOptions& options) {
  return Emitter(pl, options).run(lc);
}

}  // namespace plift
