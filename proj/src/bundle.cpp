#include "plift/bundle.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "overloaded.hpp"

namespace plift {

using json = nlohmann::ordered_json;
using detail::overloaded;

namespace {

[[noreturn]] void format_error(const std::string& what) {
  throw Error(ErrorKind::FormatError, what);
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    format_error(what + ": " + e.what());
  }
}

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    format_error(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) format_error(where + ": expected a string");
  return j.get<std::string>();
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) format_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// -- metamodel ---------------------------------------------------------------

Metamodel metamodel_from_json(const std::string& text) {
  json doc = parse_json(text, "metamodel");
  const json& classes = member(doc, "classes", "metamodel");
  if (!classes.is_object()) format_error("metamodel: \"classes\" must be an object");
  Metamodel mm;
  for (const auto& [name, attrs] : classes.items()) {
    if (!attrs.is_object()) format_error("metamodel: class " + name + " must be an object");
    ClassBody body;
    for (const auto& [attr, spec] : attrs.items()) {
      std::string where = "metamodel: " + name + "." + attr;
      Attribute a;
      if (spec.is_string()) {
        a.type = spec.get<std::string>();
      } else {
        a.type = as_string(member(spec, "type", where), where);
        if (spec.contains("many")) {
          if (!spec["many"].is_boolean()) format_error(where + ": \"many\" must be a boolean");
          if (spec["many"].get<bool>()) a.multiplicity = Multiplicity::Many;
        }
      }
      body.add(attr, std::move(a));
    }
    mm.add_class(name, std::move(body));
  }
  return mm;
}

std::string metamodel_to_json(const Metamodel& mm) {
  json classes = json::object();
  for (const auto& [name, body] : mm.classes()) {
    json attrs = json::object();
    for (const auto& [attr, a] : body.attributes())
      attrs[attr] = json{{"type", a.type}, {"many", a.many()}};
    classes[name] = std::move(attrs);
  }
  return json{{"classes", classes}}.dump(2) + "\n";
}

// -- model -------------------------------------------------------------------

namespace {

Value slot_from_json(const json& j, const Attribute* a, const std::string& where) {
  if (a == nullptr) {
    // Undeclared slot: keep it so that typechecking can report it.
    if (j.is_boolean()) return j.get<bool>();
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return Ref::none();
    format_error(where + ": unreadable value");
  }
  if (a->many()) {
    if (!j.is_array()) format_error(where + ": expected a list of object ids");
    ObjectList l;
    for (const auto& item : j) l.items.push_back(as_string(item, where));
    return l;
  }
  if (a->type == "int") {
    if (!j.is_number_integer()) format_error(where + ": expected an integer");
    return j.get<std::int64_t>();
  }
  if (a->type == "bool") {
    if (!j.is_boolean()) format_error(where + ": expected a boolean");
    return j.get<bool>();
  }
  if (a->type == "string") return as_string(j, where);
  if (j.is_null()) return Ref::none();
  return Ref{as_string(j, where)};
}

json slot_to_json(const Value& v) {
  return std::visit(overloaded{[](bool b) { return json(b); },
                               [](std::int64_t i) { return json(i); },
                               [](const std::string& s) { return json(s); },
                               [](const Ref& r) { return r.is_none() ? json(nullptr) : json(*r.target); },
                               [](const ObjectList& l) { return json(l.items); }},
                    v);
}

}  // namespace

InstanceGraph model_from_json(const std::string& text, const Metamodel& mm) {
  json doc = parse_json(text, "model");
  const json& objects = member(doc, "objects", "model");
  if (!objects.is_array()) format_error("model: \"objects\" must be an array");
  InstanceGraph g;
  for (const auto& o : objects) {
    std::string id = as_string(member(o, "id", "model object"), "model object id");
    std::string where = "model: " + id;
    ModelObject obj{id, as_string(member(o, "type", where), where + " type"), {}};
    const ClassBody* body = mm.find_class(obj.type);
    if (o.contains("slots")) {
      const json& slots = o["slots"];
      if (!slots.is_object()) format_error(where + ": \"slots\" must be an object");
      for (const auto& [name, value] : slots.items())
        obj.slots.emplace(name, slot_from_json(value, body ? body->find(name) : nullptr,
                                               where + "." + name));
    }
    g.add(std::move(obj));
  }
  return g;
}

std::string model_to_json(const InstanceGraph& g, const Metamodel& mm) {
  json objects = json::array();
  for (const auto& o : g.objects()) {
    json slots = json::object();
    if (const ClassBody* body = mm.find_class(o.type))
      for (const auto& [attr, a] : body->attributes())
        if (const Value* v = o.slot(attr)) slots[attr] = slot_to_json(*v);
    for (const auto& [name, v] : o.slots)
      if (!slots.contains(name)) slots[name] = slot_to_json(v);
    objects.push_back(json{{"id", o.id}, {"type", o.type}, {"slots", slots}});
  }
  return json{{"objects", objects}}.dump(2) + "\n";
}

// -- features, presence, configurations ---------------------------------------

FeatureModel features_from_json(const std::string& text) {
  json doc = parse_json(text, "features");
  const json& names = member(doc, "features", "features");
  if (!names.is_array()) format_error("features: \"features\" must be an array");
  std::vector<std::string> features;
  for (const auto& n : names) features.push_back(as_string(n, "features"));
  PropFormula formula;
  if (doc.contains("formula")) {
    const json& f = doc["formula"];
    if (f.is_string()) {
      formula = parse_formula(f.get<std::string>());
    } else if (f.is_array()) {
      bool first = true;
      for (const auto& c : f) {
        PropFormula conjunct = parse_formula(as_string(c, "features: formula"));
        formula = first ? conjunct : formula && conjunct;
        first = false;
      }
    } else {
      format_error("features: \"formula\" must be a string or an array of strings");
    }
  }
  return make_feature_model(std::move(features), std::move(formula));
}

std::string features_to_json(const FeatureModel& fm) {
  json formula = json::array();
  for (const auto& c : conjuncts(fm.formula)) {
    if (c == PropFormula()) continue;
    formula.push_back(to_string(c));
  }
  return json{{"features", fm.features}, {"formula", formula}}.dump(2) + "\n";
}

PresenceTable presence_from_json(const std::string& text) {
  json doc = parse_json(text, "presence");
  if (!doc.is_object()) format_error("presence: expected an object");
  PresenceTable table;
  for (const auto& [id, pc] : doc.items())
    table.set(id, parse_formula(as_string(pc, "presence: " + id)));
  return table;
}

std::string presence_to_json(const PresenceTable& p) {
  json doc = json::object();
  for (const auto& [id, pc] : p.entries()) doc[id] = to_string(pc);
  return doc.dump(2) + "\n";
}

Configuration configuration_from_json(const std::string& text, const FeatureModel& fm) {
  json doc = parse_json(text, "configuration");
  if (!doc.is_object()) format_error("configuration: expected an object");
  Assignment a;
  for (const auto& [name, v] : doc.items()) {
    if (v.is_boolean())
      a[name] = v.get<bool>();
    else if (v.is_number_integer() && (v.get<int>() == 0 || v.get<int>() == 1))
      a[name] = v.get<int>() == 1;
    else
      format_error("configuration: " + name + " must be a boolean");
  }
  return make_configuration(fm, a);
}

std::string configuration_to_json(const Configuration& k) {
  json doc = json::object();
  for (std::size_t i = 0; i < k.features().size(); ++i) doc[k.features()[i]] = bool(k.values()[i]);
  return doc.dump(2) + "\n";
}

std::vector<std::pair<std::string, std::string>> constraints_from_json(const std::string& text) {
  json doc = parse_json(text, "constraints");
  if (!doc.is_object()) format_error("constraints: expected an object of name: text");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [name, c] : doc.items()) out.emplace_back(name, as_string(c, "constraint " + name));
  return out;
}

// -- bundles -----------------------------------------------------------------

const NamedConstraint& Bundle::constraint(const std::string& name) const {
  for (const auto& c : constraints)
    if (c.name == name) return c;
  throw Error(ErrorKind::UnknownObject, "no constraint named '" + name + "'");
}

namespace {

struct Sections {
  std::string metamodel, model, features, presence, constraints;
};

Bundle assemble(const Sections& s) {
  Metamodel mm = metamodel_from_json(s.metamodel);
  InstanceGraph g = model_from_json(s.model, mm);
  FeatureModel fm = s.features.empty() ? make_feature_model({}, PropFormula())
                                       : features_from_json(s.features);
  PresenceTable pt = s.presence.empty() ? PresenceTable{} : presence_from_json(s.presence);
  Bundle b{make_product_line(std::move(mm), std::move(g), std::move(fm), std::move(pt)), {}};
  if (!s.constraints.empty())
    for (auto& [name, text] : constraints_from_json(s.constraints))
      b.constraints.push_back(
          {name, text, typecheck_constraint(parse_constraint(text), b.product_line.metamodel)});
  return b;
}

std::string section(const json& doc, const char* key, const std::filesystem::path& base) {
  if (!doc.contains(key)) return {};
  const json& v = doc[key];
  if (v.is_string()) return read_file(base / v.get<std::string>());
  if (v.is_null()) return {};
  return v.dump();
}

}  // namespace

Bundle load_bundle_text(const std::string& text, const std::filesystem::path& base) {
  json doc = parse_json(text, "bundle");
  if (!doc.is_object()) format_error("bundle: expected an object");
  for (const char* required : {"metamodel", "model"})
    if (!doc.contains(required)) format_error(std::string("bundle: missing \"") + required + "\"");
  Sections s{section(doc, "metamodel", base), section(doc, "model", base),
             section(doc, "features", base), section(doc, "presence", base),
             section(doc, "constraints", base)};
  return assemble(s);
}

Bundle load_bundle(const std::filesystem::path& path) {
  return load_bundle_text(read_file(path), path.parent_path());
}

Bundle load_bundle(const BundleSources& src) {
  auto opt = [](const std::filesystem::path& p) { return p.empty() ? std::string() : read_file(p); };
  if (src.metamodel.empty() || src.model.empty())
    format_error("both a metamodel and a model are required");
  return assemble({read_file(src.metamodel), read_file(src.model), opt(src.features),
                   opt(src.presence), opt(src.constraints)});
}

std::string bundle_to_json(const Bundle& b) {
  const ProductLine& pl = b.product_line;
  json constraints = json::object();
  for (const auto& c : b.constraints) constraints[c.name] = c.text;
  json doc{{"metamodel", json::parse(metamodel_to_json(pl.metamodel))},
           {"model", json::parse(model_to_json(pl.model, pl.metamodel))},
           {"features", json::parse(features_to_json(pl.feature_model))},
           {"presence", json::parse(presence_to_json(pl.presence))},
           {"constraints", constraints}};
  return doc.dump(2) + "\n";
}

}  // namespace plift
