#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "plift/bundle.hpp"
#include "plift/check.hpp"
#include "plift/constraint.hpp"
#include "plift/oracle.hpp"

namespace plift::test {

inline std::filesystem::path fixture(const std::string& rel) {
  return std::filesystem::path(PLIFT_FIXTURES) / rel;
}

inline Bundle microl() { return load_bundle(fixture("microl/bundle.json")); }
inline Bundle pen(const std::string& name = "bundle") {
  return load_bundle(fixture("pen/" + name + ".json"));
}

inline Metamodel microl_metamodel() {
  return metamodel_from_json(read_file(fixture("microl/metamodel.json")));
}

inline InstanceGraph microl_program(int n) {
  return model_from_json(read_file(fixture("microl/myProgram" + std::to_string(n) + ".json")),
                         microl_metamodel());
}

inline TypedConstraint typed(const std::string& text, const Metamodel& mm) {
  return typecheck_constraint(parse_constraint(text), mm);
}

/// Assignment over the feature model's features from "F=1 G=0" style pairs.
inline Configuration config(const FeatureModel& fm, const Assignment& a) {
  return make_configuration(fm, a);
}

// ---------------------------------------------------------------------------
// Random product lines for the equivalence suite and property tests.
//
// Every class C has attributes i:int, b:bool, s:string, r:T (single ref) and
// l:U* (list), with T and U drawn among classes that have objects.

struct RandomCase {
  ProductLine pl;
  std::string constraint;
};

class RandomProductLines {
public:
  explicit RandomProductLines(std::uint64_t seed) : rng_(seed) {}

  RandomCase next(std::size_t max_features = 8, std::size_t max_objects = 30,
                  std::size_t max_classes = 3) {
    classes_.clear();
    const std::size_t n_classes = 1 + pick(max_classes);
    for (std::size_t c = 0; c < n_classes; ++c) classes_.push_back("C" + std::to_string(c));

    // object counts; at least one class has objects
    std::vector<std::size_t> count(n_classes);
    std::size_t total = 1 + pick(max_objects);
    for (std::size_t i = 0; i < total; ++i) ++count[pick(n_classes)];
    inhabited_.clear();
    for (std::size_t c = 0; c < n_classes; ++c)
      if (count[c] > 0) inhabited_.push_back(c);

    Metamodel mm;
    ref_target_.assign(n_classes, 0);
    list_target_.assign(n_classes, 0);
    for (std::size_t c = 0; c < n_classes; ++c) {
      ref_target_[c] = inhabited_[pick(inhabited_.size())];
      list_target_[c] = inhabited_[pick(inhabited_.size())];
      ClassBody body;
      body.add("i", {"int", Multiplicity::One});
      body.add("b", {"bool", Multiplicity::One});
      body.add("s", {"string", Multiplicity::One});
      body.add("r", {classes_[ref_target_[c]], Multiplicity::One});
      body.add("l", {classes_[list_target_[c]], Multiplicity::Many});
      mm.add_class(classes_[c], std::move(body));
    }

    ids_.assign(n_classes, {});
    for (std::size_t c = 0; c < n_classes; ++c)
      for (std::size_t k = 0; k < count[c]; ++k)
        ids_[c].push_back("o" + std::to_string(c) + "_" + std::to_string(k));

    InstanceGraph g;
    for (std::size_t c = 0; c < n_classes; ++c)
      for (const auto& id : ids_[c]) {
        ObjectList l;
        for (std::size_t k = pick(4); k > 0; --k) l.items.push_back(any_of(list_target_[c]));
        g.add({id, classes_[c],
               {{"i", int_value()},
                {"b", Value(coin())},
                {"s", string_value()},
                {"r", Ref{any_of(ref_target_[c])}},
                {"l", l}}});
      }

    features_.clear();
    const std::size_t n_features = 1 + pick(max_features);
    for (std::size_t f = 0; f < n_features; ++f) features_.push_back("F" + std::to_string(f));
    PropFormula phi;
    for (std::size_t k = pick(4); k > 0; --k) phi = phi && formula(2);
    FeatureModel fm = make_feature_model(features_, phi);

    PresenceTable pt;
    for (std::size_t c = 0; c < n_classes; ++c)
      for (const auto& id : ids_[c])
        if (pick(10) < 6) pt.set(id, formula(2));

    RandomCase out{make_product_line(std::move(mm), std::move(g), std::move(fm), std::move(pt)), {}};
    vars_.clear();
    fresh_ = 0;
    std::size_t root = pick(n_classes);
    out.constraint = to_string(*quant(root, coin(), 3));
    return out;
  }

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin() { return pick(2) == 0; }

private:
  struct Var {
    std::string name;
    std::size_t cls;
  };

  std::string any_of(std::size_t cls) { return ids_[cls][pick(ids_[cls].size())]; }

  Value int_value() { return static_cast<std::int64_t>(pick(6)) - 2; }

  Value string_value() {
    static const char* pool[] = {"a", "b", "", "q\"t", "back\\slash", "\xc3\xa9t\xc3\xa9"};
    return std::string(pool[pick(6)]);
  }

  PropFormula formula(int depth) {
    if (depth == 0 || pick(3) == 0) {
      if (pick(12) == 0) return PropFormula::constant(coin());
      return PropFormula::feature(features_[pick(features_.size())]);
    }
    switch (pick(4)) {
      case 0: return !formula(depth - 1);
      case 1: return formula(depth - 1) && formula(depth - 1);
      case 2: return formula(depth - 1) || formula(depth - 1);
      default: return implies(formula(depth - 1), formula(depth - 1));
    }
  }

  std::string var_name() {
    // Occasionally shadow an outer variable or collide with a global symbol.
    if (!vars_.empty() && pick(8) == 0) return vars_[pick(vars_.size())].name;
    if (pick(10) == 0) return features_[pick(features_.size())];
    if (pick(12) == 0) return "o0_0";
    return "v" + std::to_string(fresh_++);
  }

  ExprRef with_var(const std::string& name, std::size_t cls, int depth) {
    vars_.push_back({name, cls});
    ExprRef body = expr(depth);
    vars_.pop_back();
    return body;
  }

  ExprRef quant(std::size_t cls, bool all, int depth) {
    std::string name = var_name();
    ExprRef body = with_var(name, cls, depth - 1);
    return all ? forall(name, TypeSet{classes_[cls]}, body)
               : exists(name, TypeSet{classes_[cls]}, body);
  }

  // Innermost binding of each name only.
  std::vector<Var> visible() const {
    std::vector<Var> out;
    for (auto it = vars_.rbegin(); it != vars_.rend(); ++it) {
      bool hidden = false;
      for (const auto& v : out) hidden = hidden || v.name == it->name;
      if (!hidden) out.push_back(*it);
    }
    return out;
  }

  // var(.r)* with the class reached.
  std::pair<Navigation, std::size_t> object_nav() {
    auto vs = visible();
    const Var& v = vs[pick(vs.size())];
    Navigation n = nav(v.name);
    std::size_t cls = v.cls;
    for (std::size_t k = pick(3); k > 0 && pick(2) == 0; --k) {
      n.path.push_back("r");
      cls = ref_target_[cls];
    }
    return {n, cls};
  }

  Navigation basic_nav(const char* attr) {
    auto [n, cls] = object_nav();
    n.path.push_back(attr);
    return n;
  }

  Term int_term() {
    switch (pick(3)) {
      case 0: return IntLit{static_cast<std::int64_t>(pick(6)) - 2};
      case 1: {
        auto [n, cls] = object_nav();
        n.path.push_back("l");
        return SizeOf{n};
      }
      default: return basic_nav("i");
    }
  }

  ExprRef atom() {
    static const CmpOp ops[] = {CmpOp::Eq, CmpOp::Ne, CmpOp::Lt, CmpOp::Le, CmpOp::Gt, CmpOp::Ge};
    switch (pick(6)) {
      case 0: return compare(ops[pick(6)], int_term(), int_term());
      case 1: {
        Term rhs = pick(3) == 0 ? Term(BoolLit{coin()}) : Term(basic_nav("b"));
        return compare(coin() ? CmpOp::Eq : CmpOp::Ne, basic_nav("b"), rhs);
      }
      case 2: {
        Term rhs = coin() ? Term(basic_nav("s")) : Term(StringLit{std::get<std::string>(string_value())});
        return compare(coin() ? CmpOp::Eq : CmpOp::Ne, basic_nav("s"), rhs);
      }
      case 3: {
        auto [lhs, cls] = object_nav();
        // find another navigation ending in the same class
        for (int tries = 0; tries < 6; ++tries) {
          auto [rhs, other] = object_nav();
          if (other == cls) return compare(coin() ? CmpOp::Eq : CmpOp::Ne, lhs, rhs);
        }
        return compare(CmpOp::Eq, lhs, lhs);
      }
      case 4: return predicate(basic_nav("b"));
      default: return predicate(BoolLit{coin()});
    }
  }

  ExprRef expr(int depth) {
    if (depth <= 0) return atom();
    switch (pick(9)) {
      case 0: return negate(expr(depth - 1));
      case 1: return land(expr(depth - 1), expr(depth - 1));
      case 2: return lor(expr(depth - 1), expr(depth - 1));
      case 3: return implies(expr(depth - 1), expr(depth - 1));
      case 4:
      case 5: {
        // list quantifier
        auto [n, cls] = object_nav();
        n.path.push_back("l");
        std::string name = var_name();
        ExprRef body = with_var(name, list_target_[cls], depth - 1);
        return coin() ? forall(name, n, body) : exists(name, n, body);
      }
      case 6: return quant(pick(classes_.size()), coin(), depth);
      default: return atom();
    }
  }

  std::mt19937_64 rng_;
  std::vector<std::string> classes_, features_;
  std::vector<std::size_t> inhabited_, ref_target_, list_target_;
  std::vector<std::vector<std::string>> ids_;
  std::vector<Var> vars_;
  std::size_t fresh_ = 0;
};

}  // namespace plift::test
