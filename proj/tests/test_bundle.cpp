#include "doctest.h"

#include <functional>

#include "plift/binding.hpp"
#include "support.hpp"

using namespace plift;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidIdentifier;
}

void same_bundle(const Bundle& a, const Bundle& b) {
  CHECK(metamodel_to_json(a.product_line.metamodel) == metamodel_to_json(b.product_line.metamodel));
  CHECK(a.product_line.model == b.product_line.model);
  CHECK(a.product_line.feature_model.features == b.product_line.feature_model.features);
  CHECK(a.product_line.feature_model.formula == b.product_line.feature_model.formula);
  CHECK(presence_to_json(a.product_line.presence) == presence_to_json(b.product_line.presence));
  REQUIRE(a.constraints.size() == b.constraints.size());
  for (std::size_t i = 0; i < a.constraints.size(); ++i) {
    CHECK(a.constraints[i].name == b.constraints[i].name);
    CHECK(a.constraints[i].typed.constraint == b.constraints[i].typed.constraint);
  }
}

}  // namespace

TEST_CASE("fixtures load") {
  Bundle m = test::microl();
  CHECK(m.constraints.size() == 3);
  CHECK(m.product_line.model.size() == 12);
  CHECK(m.product_line.feature_model.features.size() == 5);
  Bundle p = test::pen();
  CHECK(p.constraints.size() == 3);
  CHECK(p.product_line.feature_model.features.size() == 4);
}

TEST_CASE("bundle round trip") {
  for (Bundle b : {test::microl(), test::pen(), test::pen("fault1")}) {
    std::string text = bundle_to_json(b);
    Bundle again = load_bundle_text(text, ".");
    same_bundle(b, again);
    CHECK(bundle_to_json(again) == text);
  }
}

TEST_CASE("piecewise sources match the bundle document") {
  auto f = [](const char* rel) { return test::fixture(std::string("pen/") + rel); };
  Bundle piecewise = load_bundle(BundleSources{f("metamodel.json"), f("model.json"), f("features.json"),
                                               f("presence.json"), f("constraints.json")});
  same_bundle(piecewise, test::pen());
}

TEST_CASE("model serialization keeps null references and order") {
  Bundle b = test::pen("fault1");
  Configuration k = test::config(b.product_line.feature_model, {{"PenFeatures", true}, {"OpenMechanism", true},
                                                                 {"PushToOpen", true}, {"TwistToOpen", false}});
  auto g = bind(b.product_line, k).graph;
  std::string text = model_to_json(g, b.product_line.metamodel);
  CHECK(text.find("\"step\": null") != std::string::npos);
  CHECK(model_from_json(text, b.product_line.metamodel) == g);
}

TEST_CASE("configuration documents") {
  const FeatureModel fm = test::microl().product_line.feature_model;
  Configuration k = configuration_from_json(read_file(test::fixture("microl/config_runtime.json")), fm);
  CHECK_FALSE(k.value("FPU"));
  CHECK(configuration_from_json(configuration_to_json(k), fm) == k);
  CHECK(kind_of([&] { configuration_from_json("{\"FPU\": 2}", fm); }) == ErrorKind::FormatError);
  CHECK(kind_of([&] { configuration_from_json("{\"FPU\": true}", fm); }) == ErrorKind::InvalidConfiguration);
}

TEST_CASE("format errors") {
  CHECK(kind_of([] { load_bundle(std::filesystem::path("/nonexistent/bundle.json")); }) == ErrorKind::FormatError);
  CHECK(kind_of([] { load_bundle_text("{", "."); }) == ErrorKind::FormatError);
  CHECK(kind_of([] { load_bundle_text("[]", "."); }) == ErrorKind::FormatError);
  CHECK(kind_of([] { load_bundle_text("{\"metamodel\": {\"classes\": {}}}", "."); }) == ErrorKind::FormatError);
  CHECK(kind_of([] { metamodel_from_json("{\"classes\": {\"A\": {\"x\": {\"many\": true}}}}"); }) ==
        ErrorKind::FormatError);
  Metamodel mm = test::microl_metamodel();
  CHECK(kind_of([&] { model_from_json("{\"objects\": [{\"id\": \"d\", \"type\": \"DataType\", \"slots\": {\"typeName\": 3}}]}", mm); }) ==
        ErrorKind::FormatError);
  CHECK(kind_of([] { features_from_json("{\"features\": [\"a\"], \"formula\": 3}"); }) == ErrorKind::FormatError);
  CHECK(kind_of([] { presence_from_json("{\"a\": \"x &&\"}"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { constraints_from_json("{\"c\": 1}"); }) == ErrorKind::FormatError);
}

TEST_CASE("domain errors surface from bundles") {
  std::string mm = read_file(test::fixture("microl/metamodel.json"));
  std::string model = read_file(test::fixture("microl/myProgram1.json"));
  auto doc = [&](const std::string& extra) {
    return "{\"metamodel\": " + mm + ", \"model\": " + model + extra + "}";
  };
  CHECK(kind_of([&] { load_bundle_text(doc(", \"constraints\": {\"c\": \"forall x in Nope: true\"}"), "."); }) ==
        ErrorKind::UnknownTypeInQuantifier);
  CHECK(kind_of([&] { load_bundle_text(doc(", \"presence\": {\"ghost\": \"true\"}"), "."); }) ==
        ErrorKind::InvalidProductLine);
  Bundle b = load_bundle_text(doc(""), ".");
  CHECK(kind_of([&] { b.constraint("missing"); }) == ErrorKind::UnknownObject);
  CHECK(b.product_line.feature_model.features.empty());
}
