#include "plift/binding.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <unordered_map>

#include "overloaded.hpp"

namespace plift {

using detail::overloaded;

BoundVariant bind(const ProductLine& pl, const Configuration& k) {
  const Assignment assignment = k.assignment();
  BoundVariant out;
  out.config = k;
  for (const auto& o : pl.model.objects())
    out.provenance[o.id] = eval_formula(pl.presence.condition(o.id), assignment);

  auto kept = [&](const ObjectId& id) {
    auto it = out.provenance.find(id);
    return it != out.provenance.end() && it->second;
  };

  for (const auto& o : pl.model.objects()) {
    if (!kept(o.id)) continue;
    ModelObject copy{o.id, o.type, {}};
    for (const auto& [name, value] : o.slots) {
      Value bound = std::visit(
          overloaded{[&](const Ref& r) -> Value {
                       if (r.is_none() || !kept(*r.target)) return Ref::none();
                       return r;
                     },
                     [&](const ObjectList& l) -> Value {
                       ObjectList filtered;
                       for (const auto& item : l.items)
                         if (kept(item)) filtered.items.push_back(item);
                       return filtered;
                     },
                     [](const auto& basic) -> Value { return basic; }},
          value);
      copy.slots.emplace(name, std::move(bound));
    }
    out.graph.add(std::move(copy));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structural equality: colour refinement followed by a backtracking search
// for an isomorphism restricted to equally coloured objects.

namespace {

struct Indexed {
  const InstanceGraph* graph;
  std::unordered_map<std::string, std::size_t> index;
  // (source, slot name, position in list or 0 for refs) for each target
  std::vector<std::vector<std::tuple<std::size_t, std::string, std::size_t>>> incoming;

  explicit Indexed(const InstanceGraph& g) : graph(&g), incoming(g.size()) {
    for (std::size_t i = 0; i < g.size(); ++i) index.emplace(g.objects()[i].id, i);
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (const auto& [name, value] : g.objects()[i].slots) {
        if (const auto* r = std::get_if<Ref>(&value)) {
          if (!r->is_none() && index.count(*r->target))
            incoming[index.at(*r->target)].emplace_back(i, name, 0);
        } else if (const auto* l = std::get_if<ObjectList>(&value)) {
          for (std::size_t p = 0; p < l->items.size(); ++p)
            if (index.count(l->items[p]))
              incoming[index.at(l->items[p])].emplace_back(i, name, p);
        }
      }
    }
  }

  const ModelObject& at(std::size_t i) const { return graph->objects()[i]; }

  // -1 for NONE or unknown ids
  long target(const ObjectId& id) const {
    auto it = index.find(id);
    return it == index.end() ? -1 : static_cast<long>(it->second);
  }
};

std::string initial_signature(const ModelObject& o) {
  std::string sig = o.type + "{";
  for (const auto& [name, value] : o.slots) {
    sig += name + ":";
    sig += std::visit(overloaded{[](const Ref& r) -> std::string {
                                   return r.is_none() ? "NONE" : "ref";
                                 },
                                 [](const ObjectList& l) -> std::string {
                                   return "list" + std::to_string(l.items.size());
                                 },
                                 [&](const auto&) { return describe(value); }},
                      value);
    sig += ";";
  }
  return sig + "}";
}

using Colors = std::vector<std::size_t>;

std::pair<Colors, Colors> refine(const Indexed& a, const Indexed& b) {
  std::map<std::string, std::size_t> palette;
  auto paint = [&](const std::string& sig) {
    return palette.emplace(sig, palette.size()).first->second;
  };
  Colors ca(a.graph->size()), cb(b.graph->size());
  for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = paint(initial_signature(a.at(i)));
  for (std::size_t i = 0; i < cb.size(); ++i) cb[i] = paint(initial_signature(b.at(i)));

  auto signature = [](const Indexed& g, const Colors& c, std::size_t i) {
    std::string sig = std::to_string(c[i]) + "|";
    auto color_of = [&](const ObjectId& id) {
      long t = g.target(id);
      return t < 0 ? std::string("x") : std::to_string(c[static_cast<std::size_t>(t)]);
    };
    for (const auto& [name, value] : g.at(i).slots) {
      if (const auto* r = std::get_if<Ref>(&value)) {
        sig += name + "=" + (r->is_none() ? "N" : color_of(*r->target)) + ";";
      } else if (const auto* l = std::get_if<ObjectList>(&value)) {
        sig += name + "=[";
        for (const auto& item : l->items) sig += color_of(item) + ",";
        sig += "];";
      }
    }
    // Incoming edges distinguish objects that differ only in who points
    // at them.
    std::vector<std::string> in;
    for (const auto& [src, slot, pos] : g.incoming[i])
      in.push_back(std::to_string(c[src]) + "." + slot + "@" + std::to_string(pos));
    std::sort(in.begin(), in.end());
    for (const auto& s : in) sig += "<" + s;
    return sig;
  };

  std::size_t classes = palette.size();
  for (std::size_t round = 0; round <= ca.size() + cb.size(); ++round) {
    palette.clear();
    Colors na(ca.size()), nb(cb.size());
    for (std::size_t i = 0; i < ca.size(); ++i) na[i] = paint(signature(a, ca, i));
    for (std::size_t i = 0; i < cb.size(); ++i) nb[i] = paint(signature(b, cb, i));
    ca = std::move(na);
    cb = std::move(nb);
    if (palette.size() == classes) break;
    classes = palette.size();
  }
  return {ca, cb};
}

class IsoSearch {
public:
  IsoSearch(const Indexed& a, const Indexed& b, Colors ca, Colors cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)),
        map_(ca_.size(), -1), used_(cb_.size(), false) {
    order_.resize(ca_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    std::map<std::size_t, std::size_t> class_size;
    for (auto c : ca_) ++class_size[c];
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
      return class_size[ca_[x]] < class_size[ca_[y]];
    });
  }

  bool run() { return extend(0); }

private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    std::size_t i = order_[depth];
    for (std::size_t j = 0; j < cb_.size(); ++j) {
      if (used_[j] || cb_[j] != ca_[i]) continue;
      map_[i] = static_cast<long>(j);
      used_[j] = true;
      if (consistent(i) && extend(depth + 1)) return true;
      map_[i] = -1;
      used_[j] = false;
    }
    return false;
  }

  // Does `target_a` (an id in a) correspond to `target_b` under the partial
  // map? Unmapped targets are checked later.
  bool agrees(const ObjectId& target_a, const ObjectId& target_b) const {
    long ta = a_.target(target_a);
    long tb = b_.target(target_b);
    if (ta < 0 || tb < 0) return ta == tb && target_a == target_b;
    long mapped = map_[static_cast<std::size_t>(ta)];
    return mapped < 0 || mapped == tb;
  }

  bool slots_agree(std::size_t i) const {
    const ModelObject& oa = a_.at(i);
    const ModelObject& ob = b_.at(static_cast<std::size_t>(map_[i]));
    for (const auto& [name, value] : oa.slots) {
      const Value* other = ob.slot(name);
      if (other == nullptr || other->index() != value.index()) return false;
      if (const auto* r = std::get_if<Ref>(&value)) {
        const auto& rb = std::get<Ref>(*other);
        if (r->is_none() != rb.is_none()) return false;
        if (!r->is_none() && !agrees(*r->target, *rb.target)) return false;
      } else if (const auto* l = std::get_if<ObjectList>(&value)) {
        const auto& lb = std::get<ObjectList>(*other);
        if (l->items.size() != lb.items.size()) return false;
        for (std::size_t p = 0; p < l->items.size(); ++p)
          if (!agrees(l->items[p], lb.items[p])) return false;
      } else if (!(value == *other)) {
        return false;
      }
    }
    return oa.slots.size() == ob.slots.size();
  }

  bool consistent(std::size_t i) const {
    if (!slots_agree(i)) return false;
    for (const auto& [src, slot, pos] : a_.incoming[i])
      if (map_[src] >= 0 && !slots_agree(src)) return false;
    return true;
  }

  const Indexed& a_;
  const Indexed& b_;
  Colors ca_, cb_;
  std::vector<long> map_;
  std::vector<bool> used_;
  std::vector<std::size_t> order_;
};

}  // namespace

bool structurally_equal(const InstanceGraph& a, const InstanceGraph& b) {
  if (a.size() != b.size()) return false;
  Indexed ia(a), ib(b);
  auto [ca, cb] = refine(ia, ib);
  std::vector<std::size_t> ha = ca, hb = cb;
  std::sort(ha.begin(), ha.end());
  std::sort(hb.begin(), hb.end());
  if (ha != hb) return false;
  return IsoSearch(ia, ib, std::move(ca), std::move(cb)).run();
}

}  // namespace plift
