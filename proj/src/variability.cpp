#include "plift/variability.hpp"

#include <algorithm>
#include <sstream>

#include "lexer.hpp"
#include "overloaded.hpp"

namespace plift {

using detail::overloaded;

PropFormula make_formula(PropNode node) {
  return PropFormula(std::make_shared<const PropNode>(std::move(node)));
}

PropFormula::PropFormula() : PropFormula(constant(true)) {}

PropFormula PropFormula::feature(std::string name) {
  return make_formula(PropNode{FeatVar{std::move(name)}});
}

PropFormula PropFormula::constant(bool value) {
  // The default constructor delegates here, so build the node directly.
  return PropFormula(std::make_shared<const PropNode>(PropNode{PropConst{value}}));
}

bool PropFormula::operator==(const PropFormula& other) const {
  return node_ == other.node_ || *node_ == *other.node_;
}

PropFormula operator!(const PropFormula& f) { return make_formula({PropNot{f}}); }
PropFormula operator&&(const PropFormula& a, const PropFormula& b) {
  return make_formula({PropAnd{a, b}});
}
PropFormula operator||(const PropFormula& a, const PropFormula& b) {
  return make_formula({PropOr{a, b}});
}
PropFormula implies(const PropFormula& a, const PropFormula& b) {
  return make_formula({PropImplies{a, b}});
}

namespace {

using detail::Lexer;
using detail::Tok;

class FormulaParser {
public:
  explicit FormulaParser(std::string_view text) : lex_(text) {}

  PropFormula parse() {
    PropFormula f = implication();
    if (lex_.peek().kind != Tok::End) lex_.fail({"end of input"});
    return f;
  }

private:
  PropFormula implication() {
    PropFormula lhs = disjunction();
    if (lex_.accept("=>")) return implies(lhs, implication());
    return lhs;
  }
  PropFormula disjunction() {
    PropFormula lhs = conjunction();
    while (lex_.accept("||") || lex_.accept("|")) lhs = lhs || conjunction();
    return lhs;
  }
  PropFormula conjunction() {
    PropFormula lhs = unary();
    while (lex_.accept("&&") || lex_.accept("&")) lhs = lhs && unary();
    return lhs;
  }
  PropFormula unary() {
    if (lex_.accept("!")) return !unary();
    if (lex_.accept("(")) {
      PropFormula inner = implication();
      lex_.expect(")");
      return inner;
    }
    if (lex_.accept("true")) return PropFormula::constant(true);
    if (lex_.accept("false")) return PropFormula::constant(false);
    if (lex_.peek().kind != Tok::Ident) lex_.fail({"feature name", "'!'", "'('"});
    return PropFormula::feature(lex_.next().text);
  }

  Lexer lex_;
};

std::string print(const PropFormula& f, int min_prec) {
  auto binary = [&](const char* op, int prec, const PropFormula& l, const PropFormula& r,
                    bool right_assoc) {
    std::string text = print(l, right_assoc ? prec + 1 : prec) + " " + op + " " +
                       print(r, right_assoc ? prec : prec + 1);
    return prec < min_prec ? "(" + text + ")" : text;
  };
  return std::visit(
      overloaded{[](const FeatVar& v) { return v.name; },
                 [](const PropConst& c) { return std::string(c.value ? "true" : "false"); },
                 [](const PropNot& n) { return "!" + print(n.operand, 4); },
                 [&](const PropAnd& a) { return binary("&&", 3, a.lhs, a.rhs, false); },
                 [&](const PropOr& o) { return binary("||", 2, o.lhs, o.rhs, false); },
                 [&](const PropImplies& i) { return binary("=>", 1, i.lhs, i.rhs, true); }},
      f.node().node);
}

void collect_conjuncts(const PropFormula& f, std::vector<PropFormula>& out) {
  if (const auto* a = std::get_if<PropAnd>(&f.node().node)) {
    collect_conjuncts(a->lhs, out);
    collect_conjuncts(a->rhs, out);
  } else {
    out.push_back(f);
  }
}

void collect_features(const PropFormula& f, std::set<std::string>& out) {
  std::visit(overloaded{[&](const FeatVar& v) { out.insert(v.name); },
                        [](const PropConst&) {},
                        [&](const PropNot& n) { collect_features(n.operand, out); },
                        [&](const auto& b) {
                          collect_features(b.lhs, out);
                          collect_features(b.rhs, out);
                        }},
             f.node().node);
}

/// Index-based form of a formula for tight enumeration loops.
class CompiledFormula {
public:
  CompiledFormula(const PropFormula& f, const std::vector<std::string>& features) {
    root_ = compile(f, features);
  }

  bool eval(const std::vector<bool>& values) const { return eval(root_, values); }

private:
  enum class Op { Var, Const, Not, And, Or, Implies };
  struct Node {
    Op op;
    int a = -1;
    int b = -1;
  };

  int compile(const PropFormula& f, const std::vector<std::string>& features) {
    Node n{};
    std::visit(overloaded{[&](const FeatVar& v) {
                            auto it = std::find(features.begin(), features.end(), v.name);
                            if (it == features.end())
                              throw Error(ErrorKind::UnknownFeature,
                                          "unknown feature '" + v.name + "'");
                            n = {Op::Var, static_cast<int>(it - features.begin())};
                          },
                          [&](const PropConst& c) { n = {Op::Const, c.value ? 1 : 0}; },
                          [&](const PropNot& x) { n = {Op::Not, compile(x.operand, features)}; },
                          [&](const PropAnd& x) {
                            n = {Op::And, compile(x.lhs, features), compile(x.rhs, features)};
                          },
                          [&](const PropOr& x) {
                            n = {Op::Or, compile(x.lhs, features), compile(x.rhs, features)};
                          },
                          [&](const PropImplies& x) {
                            n = {Op::Implies, compile(x.lhs, features),
                                 compile(x.rhs, features)};
                          }},
               f.node().node);
    nodes_.push_back(n);
    return static_cast<int>(nodes_.size()) - 1;
  }

  bool eval(int i, const std::vector<bool>& values) const {
    const Node& n = nodes_[static_cast<std::size_t>(i)];
    switch (n.op) {
      case Op::Var: return values[static_cast<std::size_t>(n.a)];
      case Op::Const: return n.a != 0;
      case Op::Not: return !eval(n.a, values);
      case Op::And: return eval(n.a, values) && eval(n.b, values);
      case Op::Or: return eval(n.a, values) || eval(n.b, values);
      case Op::Implies: return !eval(n.a, values) || eval(n.b, values);
    }
    return false;
  }

  std::vector<Node> nodes_;
  int root_ = -1;
};

}  // namespace

PropFormula parse_formula(std::string_view text) { return FormulaParser(text).parse(); }

std::string to_string(const PropFormula& f) { return print(f, 0); }

std::vector<PropFormula> conjuncts(const PropFormula& f) {
  std::vector<PropFormula> out;
  collect_conjuncts(f, out);
  return out;
}

std::set<std::string> features_of(const PropFormula& f) {
  std::set<std::string> out;
  collect_features(f, out);
  return out;
}

bool eval_formula(const PropFormula& f, const Assignment& k) {
  return std::visit(
      overloaded{[&](const FeatVar& v) {
                   auto it = k.find(v.name);
                   if (it == k.end())
                     throw Error(ErrorKind::UnknownFeature, "unknown feature '" + v.name + "'");
                   return it->second;
                 },
                 [](const PropConst& c) { return c.value; },
                 [&](const PropNot& n) { return !eval_formula(n.operand, k); },
                 [&](const PropAnd& a) { return eval_formula(a.lhs, k) && eval_formula(a.rhs, k); },
                 [&](const PropOr& o) { return eval_formula(o.lhs, k) || eval_formula(o.rhs, k); },
                 [&](const PropImplies& i) {
                   return !eval_formula(i.lhs, k) || eval_formula(i.rhs, k);
                 }},
      f.node().node);
}

FeatureModel make_feature_model(std::vector<std::string> features, PropFormula formula) {
  std::set<std::string> seen;
  for (const auto& f : features) {
    if (!is_identifier(f) || f == "true" || f == "false")
      throw Error(ErrorKind::InvalidIdentifier, "invalid feature name '" + f + "'");
    if (!seen.insert(f).second)
      throw Error(ErrorKind::DuplicateName, "duplicate feature '" + f + "'");
  }
  for (const auto& used : features_of(formula))
    if (seen.count(used) == 0)
      throw Error(ErrorKind::UnknownFeature,
                  "feature model formula mentions undeclared feature '" + used + "'");
  return FeatureModel{std::move(features), std::move(formula)};
}

bool Configuration::value(std::string_view feature) const {
  for (std::size_t i = 0; i < features_.size(); ++i)
    if (features_[i] == feature) return values_[i];
  throw Error(ErrorKind::UnknownFeature, "unknown feature '" + std::string(feature) + "'");
}

Assignment Configuration::assignment() const {
  Assignment a;
  for (std::size_t i = 0; i < features_.size(); ++i) a[features_[i]] = values_[i];
  return a;
}

std::string Configuration::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < features_.size(); ++i) {
    if (i > 0) out += " ";
    out += features_[i] + (values_[i] ? "=1" : "=0");
  }
  return out;
}

Configuration make_configuration(const FeatureModel& fm, const Assignment& assignment) {
  for (const auto& [name, value] : assignment)
    if (std::find(fm.features.begin(), fm.features.end(), name) == fm.features.end())
      throw Error(ErrorKind::InvalidConfiguration,
                  "configuration assigns undeclared feature '" + name + "'");
  Configuration k;
  for (const auto& f : fm.features) {
    auto it = assignment.find(f);
    if (it == assignment.end())
      throw Error(ErrorKind::InvalidConfiguration,
                  "configuration does not assign feature '" + f + "'");
    k.features_.push_back(f);
    k.values_.push_back(it->second);
  }
  for (const auto& c : conjuncts(fm.formula))
    if (!eval_formula(c, assignment))
      throw Error(ErrorKind::InvalidConfiguration,
                  "configuration violates feature model: " + to_string(c));
  return k;
}

std::vector<Configuration> enumerate_configurations(const FeatureModel& fm,
                                                    std::size_t cap) {
  const std::size_t n = fm.features.size();
  if (n > cap)
    throw Error(ErrorKind::TooManyFeatures,
                std::to_string(n) + " features exceed the enumeration cap of " +
                    std::to_string(cap));
  CompiledFormula formula(fm.formula, fm.features);
  std::vector<Configuration> out;
  std::vector<bool> values(n);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    // First feature is the most significant bit.
    for (std::size_t i = 0; i < n; ++i) values[i] = ((mask >> (n - 1 - i)) & 1U) != 0;
    if (!formula.eval(values)) continue;
    Configuration k;
    k.features_ = fm.features;
    k.values_ = values;
    out.push_back(std::move(k));
  }
  return out;
}

void PresenceTable::set(ObjectId id, PropFormula condition) {
  auto it = index_.find(id);
  if (it != index_.end()) {
    entries_[it->second].second = std::move(condition);
    return;
  }
  index_.emplace(id, entries_.size());
  entries_.emplace_back(std::move(id), std::move(condition));
}

const PropFormula& PresenceTable::condition(std::string_view id) const {
  static const PropFormula kTrue = PropFormula::constant(true);
  auto it = index_.find(id);
  return it == index_.end() ? kTrue : entries_[it->second].second;
}

bool PresenceTable::has(std::string_view id) const { return index_.find(id) != index_.end(); }

Report validate_product_line(const ProductLine& pl) {
  Report report = validate_metamodel(pl.metamodel);
  if (!report.empty()) return report;
  report = typecheck_graph(pl.metamodel, pl.model, NoneRefs::Reject);
  std::set<std::string> features(pl.feature_model.features.begin(),
                                 pl.feature_model.features.end());
  for (const auto& [id, condition] : pl.presence.entries()) {
    if (!pl.model.contains(id))
      report.push_back({id, "", id, "presence condition for unknown object '" + id + "'"});
    for (const auto& f : features_of(condition))
      if (features.count(f) == 0)
        report.push_back({id, "", f, id + ": presence condition mentions unknown feature '" +
                                         f + "'"});
  }
  std::sort(report.begin(), report.end());
  return report;
}

ProductLine make_product_line(Metamodel mm, InstanceGraph model, FeatureModel fm,
                              PresenceTable presence) {
  ProductLine pl{std::move(mm), std::move(model), std::move(fm), std::move(presence)};
  Report report = validate_product_line(pl);
  if (!report.empty())
    throw Error(ErrorKind::InvalidProductLine, "invalid product line:\n" + format_report(report));
  return pl;
}

}  // namespace plift
