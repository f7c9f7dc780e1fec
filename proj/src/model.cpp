#include "plift/model.hpp"

#include <algorithm>

#include "overloaded.hpp"

namespace plift {

namespace {

using detail::overloaded;

std::string kind_name(const Value& value) {
  return std::visit(
      overloaded{[](bool) -> std::string { return "bool"; },
                 [](std::int64_t) -> std::string { return "int"; },
                 [](const std::string&) -> std::string { return "string"; },
                 [](const Ref&) -> std::string { return "reference"; },
                 [](const ObjectList&) -> std::string { return "list"; }},
      value);
}

}  // namespace

std::string describe(const Value& value) {
  return std::visit(
      overloaded{[](bool b) -> std::string { return b ? "true" : "false"; },
                 [](std::int64_t i) { return std::to_string(i); },
                 [](const std::string& s) { return "\"" + s + "\""; },
                 [](const Ref& r) { return r.is_none() ? std::string("NONE") : *r.target; },
                 [](const ObjectList& l) {
                   std::string out = "[";
                   for (std::size_t i = 0; i < l.items.size(); ++i)
                     out += (i ? ", " : "") + l.items[i];
                   return out + "]";
                 }},
      value);
}

const Value* ModelObject::slot(std::string_view name) const {
  auto it = slots.find(std::string(name));
  return it == slots.end() ? nullptr : &it->second;
}

void InstanceGraph::add(ModelObject object) {
  if (index_.count(object.id) != 0)
    throw Error(ErrorKind::DuplicateName, "duplicate object id '" + object.id + "'");
  index_.emplace(object.id, objects_.size());
  objects_.push_back(std::move(object));
}

const ModelObject* InstanceGraph::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  return it == index_.end() ? nullptr : &objects_[it->second];
}

Report typecheck_graph(const Metamodel& mm, const InstanceGraph& g, NoneRefs mode) {
  Report report;
  auto diag = [&](const ModelObject& o, const std::string& slot, std::string detail,
                  const std::string& text) {
    std::string where = slot.empty() ? o.id : o.id + "." + slot;
    report.push_back({o.id, slot, std::move(detail), where + ": " + text});
  };
  auto check_target = [&](const ModelObject& o, const std::string& slot,
                          const ObjectId& target, const std::string& type) {
    const ModelObject* t = g.find(target);
    if (t == nullptr)
      diag(o, slot, target, "dangling reference to '" + target + "'");
    else if (t->type != type)
      diag(o, slot, target,
           "'" + target + "' has type " + t->type + ", expected " + type);
  };

  for (const auto& o : g.objects()) {
    if (!is_identifier(o.id)) diag(o, "", o.id, "object id is not an identifier");
    const ClassBody* body = is_basic_type(o.type) ? nullptr : mm.find_class(o.type);
    if (body == nullptr) {
      diag(o, "", o.type, "undeclared class '" + o.type + "'");
      continue;
    }
    for (const auto& [name, value] : o.slots)
      if (body->find(name) == nullptr)
        diag(o, name, name, "slot not declared in class " + o.type);

    for (const auto& [name, attr] : body->attributes()) {
      const Value* value = o.slot(name);
      if (value == nullptr) {
        diag(o, name, "missing", "missing slot");
        continue;
      }
      std::string expected;
      bool ok = false;
      if (attr.type == "int") {
        expected = "int";
        ok = std::holds_alternative<std::int64_t>(*value);
      } else if (attr.type == "bool") {
        expected = "bool";
        ok = std::holds_alternative<bool>(*value);
      } else if (attr.type == "string") {
        expected = "string";
        ok = std::holds_alternative<std::string>(*value);
      } else if (attr.many()) {
        expected = "list";
        ok = std::holds_alternative<ObjectList>(*value);
      } else {
        expected = "reference";
        ok = std::holds_alternative<Ref>(*value);
      }
      if (!ok) {
        diag(o, name, kind_name(*value),
             "expected " + expected + " value, found " + kind_name(*value));
        continue;
      }
      if (const auto* ref = std::get_if<Ref>(value)) {
        if (ref->is_none()) {
          if (mode == NoneRefs::Reject) diag(o, name, "NONE", "NONE reference");
        } else {
          check_target(o, name, *ref->target, attr.type);
        }
      } else if (const auto* list = std::get_if<ObjectList>(value)) {
        for (const auto& item : list->items) check_target(o, name, item, attr.type);
      }
    }
  }
  std::sort(report.begin(), report.end());
  return report;
}

std::vector<ObjectId> extent(const InstanceGraph& g, std::string_view type) {
  std::vector<ObjectId> ids;
  for (const auto& o : g.objects())
    if (o.type == type) ids.push_back(o.id);
  return ids;
}

Value navigate(const InstanceGraph& g, const ObjectId& start,
               const std::vector<std::string>& path) {
  if (!g.contains(start))
    throw Error(ErrorKind::UnknownObject, "unknown object '" + start + "'");
  Value current = Ref{start};
  for (const auto& step : path) {
    const auto* ref = std::get_if<Ref>(&current);
    if (ref == nullptr)
      throw Error(ErrorKind::NavigationKindError,
                  "cannot apply '." + step + "' to a " + kind_name(current) + " value");
    if (ref->is_none()) return Ref::none();
    const ModelObject* obj = g.find(*ref->target);
    if (obj == nullptr)
      throw Error(ErrorKind::UnknownObject, "dangling reference '" + *ref->target + "'");
    const Value* next = obj->slot(step);
    if (next == nullptr)
      throw Error(ErrorKind::UnknownAttribute,
                  "object '" + obj->id + "' has no slot '" + step + "'");
    current = *next;
  }
  return current;
}

}  // namespace plift
