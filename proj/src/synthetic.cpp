#include "plift/synthetic.hpp"

#include <algorithm>
#include <random>

namespace plift {

Metamodel manufacturing_metamodel() {
  auto one = [](std::string t) { return Attribute{std::move(t), Multiplicity::One}; };
  Metamodel mm;
  ClassBody product;
  product.add("name", one("string"));
  product.add("parts", Attribute{"Part", Multiplicity::Many});
  mm.add_class("Product", std::move(product));
  ClassBody part;
  part.add("name", one("string"));
  mm.add_class("Part", std::move(part));
  ClassBody step;
  step.add("name", one("string"));
  step.add("assembledPart", one("Part"));
  step.add("requiredOp", one("Operation"));
  mm.add_class("ProductionStep", std::move(step));
  ClassBody machine;
  machine.add("name", one("string"));
  machine.add("providedOp", one("Operation"));
  mm.add_class("Machine", std::move(machine));
  ClassBody op;
  op.add("name", one("string"));
  op.add("minValue", one("int"));
  op.add("maxValue", one("int"));
  mm.add_class("Operation", std::move(op));
  ClassBody deployment;
  deployment.add("step", one("ProductionStep"));
  deployment.add("machine", one("Machine"));
  mm.add_class("Deployment", std::move(deployment));
  return mm;
}

std::vector<std::pair<std::string, std::string>> manufacturing_constraints() {
  return {
      {"stepsDeployed", "forall s in ProductionStep: exists d in Deployment: d.step = s"},
      {"partsAssembled",
       "forall prod in Product: forall part in prod.parts: exists step in ProductionStep: "
       "step.assembledPart = part"},
      {"machineCapable",
       "forall d in Deployment: d.step.requiredOp.name = d.machine.providedOp.name && "
       "(d.step.requiredOp.maxValue >= d.machine.providedOp.minValue || "
       "d.step.requiredOp.minValue <= d.machine.providedOp.maxValue)"},
  };
}

Bundle generate_synthetic(const SyntheticOptions& o) {
  if (o.features == 0 || o.optional_features >= o.features)
    throw Error(ErrorKind::InvalidProductLine, "need a root feature and at least one mandatory one");
  std::mt19937_64 rng(o.seed);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };

  // Feature tree: Root plus mandatory children, optional features hang below
  // a random mandatory one or another optional one.
  std::vector<std::string> names{"Root"};
  const std::size_t mandatory = o.features - o.optional_features;
  for (std::size_t i = 1; i < mandatory; ++i) names.push_back("M" + std::to_string(i));
  for (std::size_t i = 1; i <= o.optional_features; ++i) names.push_back("O" + std::to_string(i));
  PropFormula fm = PropFormula::feature("Root");
  auto var = [&](std::size_t i) { return PropFormula::feature(names[i]); };
  for (std::size_t i = 1; i < mandatory; ++i) {
    fm = fm && implies(var(i), var(0));
    fm = fm && implies(var(0), var(i));
  }
  for (std::size_t i = mandatory; i < names.size(); ++i) fm = fm && implies(var(i), var(pick(i)));
  for (std::size_t i = mandatory; i + 1 < names.size(); i += 5)
    fm = fm && !(var(i) && var(i + 1));
  FeatureModel features = make_feature_model(names, fm);

  const std::size_t machines = std::max<std::size_t>(1, o.machines);
  const std::size_t fixed = 1 + 2 * machines;
  if (o.objects < fixed + 3) throw Error(ErrorKind::InvalidProductLine, "too few objects");
  const std::size_t units = (o.objects - fixed) / 3;
  const std::size_t padding = o.objects - fixed - 3 * units;
  const std::size_t variable = std::min(units, (o.presence_conditions + 2) / 3);

  InstanceGraph g;
  PresenceTable pt;
  ObjectList parts;
  for (std::size_t m = 0; m < machines; ++m) {
    std::string op = "op" + std::to_string(m), mc = "machine" + std::to_string(m);
    std::int64_t lo = static_cast<std::int64_t>(pick(50));
    g.add({op, "Operation", {{"name", std::string(op)}, {"minValue", lo}, {"maxValue", lo + 10 + static_cast<std::int64_t>(pick(50))}}});
    g.add({mc, "Machine", {{"name", std::string(mc)}, {"providedOp", Ref{op}}}});
  }
  for (std::size_t p = 0; p < padding; ++p) {
    std::string op = "spareOp" + std::to_string(p);
    g.add({op, "Operation", {{"name", std::string(op)}, {"minValue", std::int64_t{0}}, {"maxValue", std::int64_t{1}}}});
  }
  std::size_t faulty = o.fault ? pick(variable) : variable;
  for (std::size_t u = 0; u < units; ++u) {
    std::string n = std::to_string(u);
    std::size_t m = pick(machines);
    std::string part = "part" + n, step = "step" + n, depl = "depl" + n;
    g.add({part, "Part", {{"name", std::string(part)}}});
    g.add({step, "ProductionStep",
           {{"name", std::string(step)}, {"assembledPart", Ref{part}},
            {"requiredOp", Ref{"op" + std::to_string(m)}}}});
    g.add({depl, "Deployment", {{"step", Ref{step}}, {"machine", Ref{"machine" + std::to_string(m)}}}});
    parts.items.push_back(part);
    if (u < variable) {
      PropFormula pc = var(mandatory + pick(o.optional_features));
      if (pick(3) == 0) pc = pc && var(mandatory + pick(o.optional_features));
      pt.set(part, pc);
      pt.set(step, pc);
      pt.set(depl, u == faulty ? !pc : pc);
    }
  }
  g.add({"product", "Product", {{"name", std::string("product")}, {"parts", parts}}});

  Bundle b{make_product_line(manufacturing_metamodel(), std::move(g), std::move(features), std::move(pt)), {}};
  for (auto& [name, text] : manufacturing_constraints())
    b.constraints.push_back({name, text, typecheck_constraint(parse_constraint(text), b.product_line.metamodel)});
  return b;
}

}  // namespace plift
