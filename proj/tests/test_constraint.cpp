#include "doctest.h"

#include "plift/constraint.hpp"
#include "support.hpp"

using namespace plift;

namespace {

const char* kUnique =
    "forall f1 in FunctionDefinition: !exists f2 in FunctionDefinition: f1 != f2 && f1.funName = f2.funName";

void fixed_point(const std::string& text) {
  Constraint c = parse_constraint(text);
  std::string printed = to_string(c);
  CHECK(parse_constraint(printed) == c);
  CHECK(to_string(parse_constraint(printed)) == printed);
}

}  // namespace

TEST_CASE("uniqueness constraint AST") {
  ExprRef expected = forall(
      "f1", TypeSet{"FunctionDefinition"},
      negate(exists("f2", TypeSet{"FunctionDefinition"},
                    land(compare(CmpOp::Ne, nav("f1"), nav("f2")),
                         compare(CmpOp::Eq, nav("f1", {"funName"}), nav("f2", {"funName"}))))));
  CHECK(parse_constraint(kUnique).root == expected);
}

TEST_CASE("literal atom and size term") {
  CHECK(parse_constraint("forall x in T: true").root == forall("x", TypeSet{"T"}, predicate(BoolLit{true})));
  CHECK(parse_constraint("forall c in FunctionCall: c.args.size = 0").root ==
        forall("c", TypeSet{"FunctionCall"},
               compare(CmpOp::Eq, SizeOf{nav("c", {"args"})}, IntLit{0})));
}

TEST_CASE("navigation domain and strings") {
  auto c = parse_constraint("exists a in c.args: a.varName = \"x\\\"y\"");
  const auto& q = std::get<Quant>(c.root->node);
  CHECK(q.kind == Quantifier::Exists);
  CHECK(std::get<Navigation>(q.domain) == nav("c", {"args"}));
  const auto& cmp = std::get<Compare>(q.body->node);
  CHECK(std::get<StringLit>(cmp.rhs).value == "x\"y");
}

TEST_CASE("precedence") {
  auto body = [](const std::string& e) { return std::get<Quant>(parse_constraint("forall x in T: " + e).root->node).body; };
  auto p = [](const char* f) { return predicate(nav("x", {f})); };
  CHECK(body("x.a || x.b && x.c") == lor(p("a"), land(p("b"), p("c"))));
  CHECK(body("!x.a && x.b") == land(negate(p("a")), p("b")));
  CHECK(body("x.a => x.b => x.c") == implies(p("a"), implies(p("b"), p("c"))));
  CHECK(body("x.a || x.b => x.c") == implies(lor(p("a"), p("b")), p("c")));
  CHECK(body("(x.a => x.b) => x.c") == implies(implies(p("a"), p("b")), p("c")));
  CHECK(body("x.a && forall y in T: x.b || x.c") ==
        land(p("a"), forall("y", TypeSet{"T"}, lor(p("b"), p("c")))));
  CHECK(body("x.i <= -3") == compare(CmpOp::Le, nav("x", {"i"}), IntLit{-3}));
}

TEST_CASE("parse print parse is a fixed point") {
  fixed_point(kUnique);
  fixed_point("forall a in Argument: exists v in VariableDeclaration: a.varName = v.varName");
  fixed_point(
      "forall F_call in FunctionCall: forall a in F_call.args: exists F_def in FunctionDefinition: "
      "forall p in F_def.params: exists v in VariableDeclaration: a.paramName = p.paramName && "
      "a.varName = v.varName => v.varType = p.paramType");
  fixed_point("forall x in T: !(x.a || x.b) && (x.c => x.d) || !!x.e");
  fixed_point("forall x in T: (x.a => x.b) => (x.c => x.d)");
  fixed_point("exists x in T: x.s != \"a\\\\b\\n\\t\\\"\" && x.n.size >= 2");
  fixed_point("forall x in T: !exists y in x.l: y.i < x.i || false");
}

TEST_CASE("random constraints round trip") {
  test::RandomProductLines gen(7);
  for (int i = 0; i < 200; ++i) {
    auto c = gen.next();
    fixed_point(c.constraint);
  }
}

TEST_CASE("syntax errors carry position and expectation") {
  auto error_of = [](const std::string& text) -> SyntaxError {
    try {
      parse_constraint(text);
    } catch (const SyntaxError& e) {
      return e;
    }
    FAIL("expected SyntaxError for " << text);
    return SyntaxError("", 0, 0, {});
  };

  SyntaxError e = error_of("forall x T: true");
  CHECK(e.line() == 1);
  CHECK(e.column() == 10);
  CHECK(e.kind() == ErrorKind::SyntaxError);
  CHECK(std::find(e.expected().begin(), e.expected().end(), "'in'") != e.expected().end());

  e = error_of("forall x in T:\n  x.a = ");
  CHECK(e.line() == 2);

  CHECK_THROWS_AS(parse_constraint("x.a = 1"), SyntaxError);          // not rooted at a quantifier
  CHECK_THROWS_AS(parse_constraint("forall x in T: x.a = 1 )"), SyntaxError);
  CHECK_THROWS_AS(parse_constraint("forall x in T: x.a = \"open"), SyntaxError);
  CHECK_THROWS_AS(parse_constraint("forall x in T: selected(x)"), SyntaxError);
  CHECK_THROWS_AS(parse_constraint("forall forall in T: true"), SyntaxError);
  CHECK_THROWS_AS(parse_constraint("forall x in T: x.a = 99999999999999999999"), SyntaxError);
}

TEST_CASE("selected guards only in lifted mode") {
  auto c = parse_constraint("forall x in T: selected(x) => x.a = 1", true);
  CHECK(count_selected(*c.root) == 1);
  CHECK(count_type_quantifiers(*c.root) == 1);
}

TEST_CASE("counting helpers") {
  auto c = parse_constraint(
      "forall F_call in FunctionCall: forall a in F_call.args: exists F_def in FunctionDefinition: "
      "forall p in F_def.params: exists v in VariableDeclaration: a.paramName = p.paramName");
  CHECK(count_type_quantifiers(*c.root) == 3);
  CHECK(count_selected(*c.root) == 0);
}
