#include "plift/meta.hpp"

#include <algorithm>

namespace plift {

bool is_basic_type(std::string_view type) {
  return type == "int" || type == "bool" || type == "string";
}

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  if (!alpha(name.front())) return false;
  return std::all_of(name.begin(), name.end(),
                     [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); });
}

void ClassBody::add(std::string name, Attribute attribute) {
  if (find(name) != nullptr)
    throw Error(ErrorKind::DuplicateName, "duplicate attribute '" + name + "'");
  attributes_.emplace_back(std::move(name), std::move(attribute));
}

const Attribute* ClassBody::find(std::string_view name) const {
  for (const auto& [n, a] : attributes_)
    if (n == name) return &a;
  return nullptr;
}

void Metamodel::add_class(std::string name, ClassBody body) {
  if (index_.count(name) != 0)
    throw Error(ErrorKind::DuplicateName, "duplicate class '" + name + "'");
  index_.emplace(name, classes_.size());
  classes_.emplace_back(std::move(name), std::move(body));
}

bool Metamodel::has_class(std::string_view name) const {
  return index_.find(name) != index_.end();
}

const ClassBody* Metamodel::find_class(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &classes_[it->second].second;
}

Report validate_metamodel(const Metamodel& mm) {
  Report report;
  for (const auto& [cls, body] : mm.classes()) {
    if (!is_identifier(cls))
      report.push_back({cls, "", "", "class name '" + cls + "' is not an identifier"});
    if (is_basic_type(cls))
      report.push_back({cls, "", cls, "class '" + cls + "' redeclares a basic type"});
    for (const auto& [name, attr] : body.attributes()) {
      if (!is_identifier(name))
        report.push_back({cls, name, "",
                          cls + "." + name + ": attribute name is not an identifier"});
      if (!is_basic_type(attr.type) && !mm.has_class(attr.type))
        report.push_back({cls, name, attr.type,
                          cls + "." + name + ": type '" + attr.type + "' is not defined"});
    }
  }
  std::sort(report.begin(), report.end());
  return report;
}

const Attribute& lookup_attribute(const Metamodel& mm, std::string_view type,
                                  std::string_view name) {
  if (is_basic_type(type))
    throw Error(ErrorKind::BasicTypeHasNoAttributes,
                "basic type '" + std::string(type) + "' has no attributes");
  const ClassBody* body = mm.find_class(type);
  if (body == nullptr)
    throw Error(ErrorKind::UnknownType, "unknown type '" + std::string(type) + "'");
  const Attribute* attr = body->find(name);
  if (attr == nullptr)
    throw Error(ErrorKind::UnknownAttribute, "type '" + std::string(type) +
                                                 "' has no attribute '" +
                                                 std::string(name) + "'");
  return *attr;
}

}  // namespace plift
