#include "doctest.h"

#include "plift/synthetic.hpp"
#include "support.hpp"

using namespace plift;

TEST_CASE("table-scale generator shape") {
  Bundle b = generate_synthetic({});
  const ProductLine& pl = b.product_line;
  CHECK(pl.model.size() == 1227);
  CHECK(pl.feature_model.features.size() == 28);
  CHECK(pl.presence.size() >= 100);
  CHECK(pl.presence.size() <= 120);
  CHECK(validate_product_line(pl).empty());
  CHECK(b.constraints.size() == 3);
}

TEST_CASE("generator is deterministic per seed") {
  SyntheticOptions o;
  o.objects = 200;
  o.features = 8;
  o.optional_features = 5;
  o.presence_conditions = 30;
  CHECK(bundle_to_json(generate_synthetic(o)) == bundle_to_json(generate_synthetic(o)));
  SyntheticOptions other = o;
  other.seed = 2;
  CHECK(bundle_to_json(generate_synthetic(o)) != bundle_to_json(generate_synthetic(other)));
}

TEST_CASE("small synthetic product lines agree with the oracle") {
  for (bool fault : {false, true}) {
    SyntheticOptions o;
    o.objects = 81;
    o.features = 3;
    o.optional_features = 2;
    o.presence_conditions = 23;
    o.machines = 3;
    o.fault = fault;
    Bundle b = generate_synthetic(o);
    bool violated = false;
    for (const auto& c : b.constraints) {
      EquivalenceReport r = equivalence_test(b.product_line, c.typed);
      CHECK_MESSAGE(r.agree, c.name << "\n" << r.text);
      violated = violated || std::holds_alternative<Violation>(r.smt);
    }
    CHECK(violated == fault);
  }
}

TEST_CASE("shared metamodel") {
  CHECK(metamodel_to_json(manufacturing_metamodel()) == metamodel_to_json(test::pen().product_line.metamodel));
  auto cs = manufacturing_constraints();
  REQUIRE(cs.size() == 3);
  CHECK(cs[0].first == "stepsDeployed");
}
