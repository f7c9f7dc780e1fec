#pragma once

#include <cstdint>
#include <optional>

#include "plift/bundle.hpp"

namespace plift {

/// Manufacturing-style product line on the pen metamodel: one product,
/// machines with their operations, and units of (part, step, deployment)
/// where variable units share one presence condition across all three.
struct SyntheticOptions {
  std::size_t objects = 1227;
  std::size_t features = 28;
  std::size_t optional_features = 21;
  std::size_t presence_conditions = 110;
  std::size_t machines = 10;
  std::uint64_t seed = 1;
  /// Negates the presence condition of one variable unit's deployment.
  bool fault = false;
};

Bundle generate_synthetic(const SyntheticOptions& options);

/// The metamodel and the three constraints shared by the pen fixtures and
/// the generator.
Metamodel manufacturing_metamodel();
std::vector<std::pair<std::string, std::string>> manufacturing_constraints();

}  // namespace plift
