#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "plift/error.hpp"
#include "plift/meta.hpp"
#include "plift/model.hpp"

namespace plift {

struct PropNode;

/// Propositional formula over feature names. Used both for the feature
/// model and for presence conditions. Immutable, cheap to copy.
class PropFormula {
public:
  /// The constant true.
  PropFormula();

  static PropFormula feature(std::string name);
  static PropFormula constant(bool value);

  const PropNode& node() const { return *node_; }

  bool operator==(const PropFormula& other) const;

private:
  explicit PropFormula(std::shared_ptr<const PropNode> node) : node_(std::move(node)) {}
  friend PropFormula make_formula(PropNode node);

  std::shared_ptr<const PropNode> node_;
};

struct FeatVar {
  std::string name;
  bool operator==(const FeatVar&) const = default;
};
struct PropConst {
  bool value;
  bool operator==(const PropConst&) const = default;
};
struct PropNot {
  PropFormula operand;
  bool operator==(const PropNot&) const = default;
};
struct PropAnd {
  PropFormula lhs, rhs;
  bool operator==(const PropAnd&) const = default;
};
struct PropOr {
  PropFormula lhs, rhs;
  bool operator==(const PropOr&) const = default;
};
struct PropImplies {
  PropFormula lhs, rhs;
  bool operator==(const PropImplies&) const = default;
};

struct PropNode {
  std::variant<FeatVar, PropConst, PropNot, PropAnd, PropOr, PropImplies> node;
  bool operator==(const PropNode&) const = default;
};

PropFormula make_formula(PropNode node);
PropFormula operator!(const PropFormula& f);
PropFormula operator&&(const PropFormula& a, const PropFormula& b);
PropFormula operator||(const PropFormula& a, const PropFormula& b);
PropFormula implies(const PropFormula& a, const PropFormula& b);

/// Feature names with `!`, `&&`, `||`, `=>`, parentheses, `true`, `false`.
/// `&` and `|` are accepted as `&&` and `||`. Throws SyntaxError.
PropFormula parse_formula(std::string_view text);

std::string to_string(const PropFormula& f);

/// Top-level conjuncts, left to right; a non-conjunction is its own sole
/// conjunct.
std::vector<PropFormula> conjuncts(const PropFormula& f);

std::set<std::string> features_of(const PropFormula& f);

using Assignment = std::map<std::string, bool, std::less<>>;

/// Truth value under `k`. Throws UnknownFeature for unmapped names.
bool eval_formula(const PropFormula& f, const Assignment& k);

struct FeatureModel {
  std::vector<std::string> features;
  PropFormula formula;
};

/// Checks names are unique identifiers and that the formula is closed.
/// Throws DuplicateName, InvalidIdentifier or UnknownFeature.
FeatureModel make_feature_model(std::vector<std::string> features, PropFormula formula);

/// A total assignment known to satisfy its feature model.
class Configuration {
public:
  Configuration() = default;

  const std::vector<std::string>& features() const { return features_; }
  const std::vector<bool>& values() const { return values_; }
  bool value(std::string_view feature) const;
  Assignment assignment() const;

  /// e.g. "FPU=1 Runtime=1 Precision=0" in feature order.
  std::string to_string() const;

  bool operator==(const Configuration&) const = default;

private:
  friend Configuration make_configuration(const FeatureModel&, const Assignment&);
  friend std::vector<Configuration> enumerate_configurations(const FeatureModel&,
                                                             std::size_t);
  std::vector<std::string> features_;
  std::vector<bool> values_;
};

/// Throws InvalidConfiguration when the assignment is not total over the
/// features or does not satisfy the formula (naming the first violated
/// conjunct).
Configuration make_configuration(const FeatureModel& fm, const Assignment& assignment);

inline constexpr std::size_t kDefaultEnumerationCap = 24;

/// Every satisfying assignment, ordered lexicographically over the feature
/// list with false before true. Throws TooManyFeatures above `cap`.
std::vector<Configuration> enumerate_configurations(
    const FeatureModel& fm, std::size_t cap = kDefaultEnumerationCap);

/// Presence conditions per object. Objects without an entry are always
/// present.
class PresenceTable {
public:
  void set(ObjectId id, PropFormula condition);
  const PropFormula& condition(std::string_view id) const;
  bool has(std::string_view id) const;
  const std::vector<std::pair<ObjectId, PropFormula>>& entries() const {
    return entries_;
  }
  std::size_t size() const { return entries_.size(); }

private:
  std::vector<std::pair<ObjectId, PropFormula>> entries_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

struct ProductLine {
  Metamodel metamodel;
  InstanceGraph model;
  FeatureModel feature_model;
  PresenceTable presence;
};

/// Empty iff the metamodel is well-defined, the model is strictly well-typed,
/// and every presence entry names a registered object and only declared
/// features.
Report validate_product_line(const ProductLine& pl);

/// Throws InvalidProductLine with the report when validation fails.
ProductLine make_product_line(Metamodel mm, InstanceGraph model, FeatureModel fm,
                              PresenceTable presence);

}  // namespace plift
