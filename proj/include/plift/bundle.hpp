#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "plift/typecheck.hpp"
#include "plift/variability.hpp"

namespace plift {

struct NamedConstraint {
  std::string name;
  std::string text;
  TypedConstraint typed;
};

struct Bundle {
  ProductLine product_line;
  std::vector<NamedConstraint> constraints;

  /// Throws UnknownObject naming the missing constraint.
  const NamedConstraint& constraint(const std::string& name) const;
};

/// Paths for a bundle given piecewise. Each may be empty except metamodel
/// and model.
struct BundleSources {
  std::filesystem::path metamodel, model, features, presence, constraints;
};

// Every loader throws FormatError for unreadable or ill-shaped documents and
// the domain errors of the underlying constructors otherwise.

Metamodel metamodel_from_json(const std::string& text);
std::string metamodel_to_json(const Metamodel& mm);

/// The metamodel decides how each slot value is read.
InstanceGraph model_from_json(const std::string& text, const Metamodel& mm);
std::string model_to_json(const InstanceGraph& g, const Metamodel& mm);

FeatureModel features_from_json(const std::string& text);
std::string features_to_json(const FeatureModel& fm);

PresenceTable presence_from_json(const std::string& text);
std::string presence_to_json(const PresenceTable& p);

/// {feature: bool}, checked against the feature model.
Configuration configuration_from_json(const std::string& text, const FeatureModel& fm);
std::string configuration_to_json(const Configuration& k);

std::vector<std::pair<std::string, std::string>> constraints_from_json(const std::string& text);

/// A bundle document holds each section inline or as a path relative to
/// the document.
Bundle load_bundle(const std::filesystem::path& path);
Bundle load_bundle(const BundleSources& sources);
Bundle load_bundle_text(const std::string& text, const std::filesystem::path& base);

/// Self-contained bundle document with every section inline.
std::string bundle_to_json(const Bundle& b);

std::string read_file(const std::filesystem::path& path);

}  // namespace plift
