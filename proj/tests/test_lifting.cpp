#include "doctest.h"

#include "overloaded_test.hpp"
#include "plift/binding.hpp"
#include "plift/evaluate.hpp"
#include "plift/lifting.hpp"
#include "support.hpp"

using namespace plift;

TEST_CASE("lifted forms of the microl constraints") {
  Bundle b = test::microl();
  ExprRef unique = forall(
      "f1", TypeSet{"FunctionDefinition"},
      implies(selected("f1"),
              negate(exists("f2", TypeSet{"FunctionDefinition"},
                            land(selected("f2"),
                                 land(compare(CmpOp::Ne, nav("f1"), nav("f2")),
                                      compare(CmpOp::Eq, nav("f1", {"funName"}), nav("f2", {"funName"}))))))));
  CHECK(lift(b.constraint("uniqueFunctionNames").typed).root == unique);

  ExprRef defined = forall(
      "a", TypeSet{"Argument"},
      implies(selected("a"), exists("v", TypeSet{"VariableDeclaration"},
                                    land(selected("v"), compare(CmpOp::Eq, nav("a", {"varName"}),
                                                                nav("v", {"varName"}))))));
  CHECK(lift(b.constraint("argumentsDefined").typed).root == defined);

  ExprRef match = forall(
      "F_call", TypeSet{"FunctionCall"},
      implies(selected("F_call"),
              forall("a", nav("F_call", {"args"}),
                     exists("F_def", TypeSet{"FunctionDefinition"},
                            land(selected("F_def"),
                                 forall("p", nav("F_def", {"params"}),
                                        exists("v", TypeSet{"VariableDeclaration"},
                                               land(selected("v"),
                                                    implies(land(compare(CmpOp::Eq, nav("a", {"paramName"}), nav("p", {"paramName"})),
                                                                 compare(CmpOp::Eq, nav("a", {"varName"}), nav("v", {"varName"}))),
                                                            compare(CmpOp::Eq, nav("v", {"varType"}), nav("p", {"paramType"})))))))))));
  CHECK(lift(b.constraint("typeMatch").typed).root == match);
}

TEST_CASE("golden lifted text") {
  Bundle b = test::microl();
  std::string golden = read_file(test::fixture("golden/uniqueFunctionNames.lifted"));
  CHECK(print_lifted(lift(b.constraint("uniqueFunctionNames").typed)) + "\n" == golden);
}

TEST_CASE("printing round trips through the lifted parser") {
  test::RandomProductLines gen(19);
  for (int i = 0; i < 150; ++i) {
    auto rc = gen.next();
    auto lc = lift(typecheck_constraint(parse_constraint(rc.constraint), rc.pl.metamodel));
    CHECK(parse_constraint(print_lifted(lc), true).root == lc.root);
  }
}

TEST_CASE("navigation-only bodies print as the input") {
  Metamodel mm = test::microl_metamodel();
  auto tc = test::typed("forall a in Argument: a.varName = \"x\"", mm);
  auto inner = std::get<Quant>(tc.constraint.root->node).body;
  CHECK(lift(*inner) == inner);

  auto tc2 = test::typed("forall b in Body: forall v in b.vars: exists w in b.vars: v.varName = w.varName", mm);
  auto nav_part = std::get<Quant>(tc2.constraint.root->node).body;
  CHECK(to_string(*lift(*nav_part)) == to_string(*nav_part));
}

TEST_CASE("guard count and guard stripping") {
  test::RandomProductLines gen(23);
  for (int i = 0; i < 200; ++i) {
    auto rc = gen.next();
    auto tc = typecheck_constraint(parse_constraint(rc.constraint), rc.pl.metamodel);
    auto lc = lift(tc);
    CHECK(count_selected(*lc.root) == count_type_quantifiers(*tc.constraint.root));
    CHECK(strip_guards(*lc.root) == tc.constraint.root);
  }
}

TEST_CASE("with trivial presence the lifted constraint evaluates like the original") {
  test::RandomProductLines gen(29);
  for (int i = 0; i < 120; ++i) {
    auto rc = gen.next();
    auto tc = typecheck_constraint(parse_constraint(rc.constraint), rc.pl.metamodel);
    auto lc = lift(tc);
    auto always = [](const ObjectId&) { return true; };
    CHECK(evaluate_expr(*lc.root, rc.pl.metamodel, rc.pl.model, always) == evaluate(tc, rc.pl.metamodel, rc.pl.model));
  }
}

TEST_CASE("lifted evaluation on the product line equals evaluation on each variant") {
  test::RandomProductLines gen(31);
  for (int i = 0; i < 80; ++i) {
    auto rc = gen.next();
    auto tc = typecheck_constraint(parse_constraint(rc.constraint), rc.pl.metamodel);
    auto lc = lift(tc);
    for (const auto& k : enumerate_configurations(rc.pl.feature_model)) {
      BoundVariant v = bind(rc.pl, k);
      auto sel = [&](const ObjectId& id) { return v.provenance.at(id); };
      CHECK(evaluate_expr(*lc.root, rc.pl.metamodel, v.graph, sel) == evaluate(tc, rc.pl.metamodel, v.graph));
    }
  }
}

TEST_CASE("evaluating a guard without a selection throws") {
  auto c = parse_constraint("forall x in T: selected(x)", true);
  Metamodel mm;
  mm.add_class("T", {});
  InstanceGraph g;
  g.add({"o", "T", {}});
  try {
    evaluate_expr(*c.root, mm, g);
    FAIL("expected UnsupportedAtom");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedAtom);
  }
}
