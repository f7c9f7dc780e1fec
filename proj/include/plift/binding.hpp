#pragma once

#include <map>

#include "plift/model.hpp"
#include "plift/variability.hpp"

namespace plift {

struct BoundVariant {
  InstanceGraph graph;
  Configuration config;
  /// true = kept, false = dropped, for every object of the product line.
  std::map<ObjectId, bool> provenance;
};

/// Derives the variant of `pl` under `k`: objects whose presence condition
/// fails are removed, references to them become NONE, and list slots keep
/// exactly the present elements in source order. Basic values are untouched.
BoundVariant bind(const ProductLine& pl, const Configuration& k);

/// True iff a type-preserving bijection between the objects of `a` and `b`
/// matches all basic slots and maps references and lists onto each other.
/// Object ids need not agree.
bool structurally_equal(const InstanceGraph& a, const InstanceGraph& b);

}  // namespace plift
