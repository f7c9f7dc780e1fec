#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "plift/error.hpp"
#include "plift/meta.hpp"

namespace plift {

using ObjectId = std::string;

/// A single reference. An empty target is NONE, the absent object that only
/// binding produces.
struct Ref {
  std::optional<ObjectId> target;

  static Ref none() { return {}; }
  bool is_none() const { return !target.has_value(); }
  bool operator==(const Ref&) const = default;
};

/// Ordered object list; never holds NONE.
struct ObjectList {
  std::vector<ObjectId> items;
  bool operator==(const ObjectList&) const = default;
};

using Value = std::variant<bool, std::int64_t, std::string, Ref, ObjectList>;

std::string describe(const Value& value);

struct ModelObject {
  ObjectId id;
  std::string type;
  std::map<std::string, Value> slots;

  const Value* slot(std::string_view name) const;
  bool operator==(const ModelObject&) const = default;
};

/// Registry of typed objects in insertion order.
class InstanceGraph {
public:
  /// Throws DuplicateName if the id is already registered.
  void add(ModelObject object);

  const ModelObject* find(std::string_view id) const;
  bool contains(std::string_view id) const { return find(id) != nullptr; }
  const std::vector<ModelObject>& objects() const { return objects_; }
  std::size_t size() const { return objects_.size(); }
  bool empty() const { return objects_.empty(); }

  bool operator==(const InstanceGraph& other) const {
    return objects_ == other.objects_;
  }

private:
  std::vector<ModelObject> objects_;
  std::unordered_map<std::string, std::size_t> index_;
};

enum class NoneRefs {
  Reject,  // strict: NONE is a diagnostic
  Accept,  // post-binding
};

/// Empty iff every object is a well-kinded instance of its declared class
/// and no reference dangles.
Report typecheck_graph(const Metamodel& mm, const InstanceGraph& g,
                       NoneRefs mode = NoneRefs::Reject);

/// Objects of exactly type `type`, in insertion order. Closed world.
std::vector<ObjectId> extent(const InstanceGraph& g, std::string_view type);

/// Follows `path` from `start`. NONE is absorbing; a list may only be reached
/// at the last step. Throws UnknownObject or NavigationKindError.
Value navigate(const InstanceGraph& g, const ObjectId& start,
               const std::vector<std::string>& path);

}  // namespace plift
