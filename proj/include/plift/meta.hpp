#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plift/error.hpp"

namespace plift {

enum class Multiplicity { One, Many };

struct Attribute {
  std::string type;
  Multiplicity multiplicity = Multiplicity::One;

  bool many() const { return multiplicity == Multiplicity::Many; }
  bool operator==(const Attribute&) const = default;
};

/// True for int, bool and string.
bool is_basic_type(std::string_view type);

/// [A-Za-z_][A-Za-z0-9_]*
bool is_identifier(std::string_view name);

/// Attributes of one class, kept in declaration order.
class ClassBody {
public:
  /// Throws DuplicateName if `name` is already declared.
  void add(std::string name, Attribute attribute);

  const Attribute* find(std::string_view name) const;
  const std::vector<std::pair<std::string, Attribute>>& attributes() const {
    return attributes_;
  }
  std::size_t size() const { return attributes_.size(); }

private:
  std::vector<std::pair<std::string, Attribute>> attributes_;
};

/// Finite map from class names to class bodies. Basic types are implicit.
/// Immutable once handed out; all lookups are const.
class Metamodel {
public:
  /// Throws DuplicateName on redeclaration.
  void add_class(std::string name, ClassBody body);

  bool has_class(std::string_view name) const;
  const ClassBody* find_class(std::string_view name) const;
  const std::vector<std::pair<std::string, ClassBody>>& classes() const {
    return classes_;
  }

private:
  std::vector<std::pair<std::string, ClassBody>> classes_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// Empty iff the metamodel is well-defined: every referenced type is basic or
/// declared, no class is named like a basic type, and every name is an
/// identifier. The report is sorted, so declaration order does not matter.
Report validate_metamodel(const Metamodel& mm);

/// mm(type)(name). Throws UnknownType, BasicTypeHasNoAttributes or
/// UnknownAttribute.
const Attribute& lookup_attribute(const Metamodel& mm, std::string_view type,
                                  std::string_view name);

}  // namespace plift
