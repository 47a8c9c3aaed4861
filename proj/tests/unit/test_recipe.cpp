#include <doctest.h>

#include "knotlike/error.hpp"
#include "knotlike/recipe.hpp"

using namespace knotlike;

namespace {

int parse_error_column(const char* text) {
  try {
    parse_knot_expr(text);
  } catch (const ParseError& e) {
    return e.column();
  }
  FAIL("expected a parse error for ", text);
  return 0;
}

}  // namespace

TEST_CASE("parsing") {
  const KnotExpr e = parse_knot_expr("Cable(D;3,4) - T(3,4)");
  REQUIRE(e.terms.size() == 2);
  CHECK(e.terms[0].atom.kind == KnotAtom::Kind::Cable);
  CHECK(e.terms[0].atom.inner->kind == KnotAtom::Kind::D);
  CHECK(e.terms[0].atom.p == 3);
  CHECK(e.terms[0].atom.q == 4);
  CHECK_FALSE(e.terms[0].negated);
  CHECK(e.terms[1].negated);
  CHECK(e.terms[1].atom.kind == KnotAtom::Kind::Torus);

  const KnotExpr s = parse_knot_expr("Std(1,-2,2,-1)");
  REQUIRE(s.terms.size() == 1);
  CHECK(s.terms[0].atom.kind == KnotAtom::Kind::Std);
  CHECK(s.terms[0].atom.params == Params{1, -2, 2, -1});

  const KnotExpr m = parse_knot_expr("2*Thin(-3)");
  CHECK(m.terms[0].multiplier == 2);
  CHECK(m.terms[0].atom.t == -3);

  CHECK(to_string(parse_knot_expr("Cable(T(2,3);2,5)  -  T(4,5)")) == "Cable(T(2,3);2,5) - T(4,5)");
  CHECK(parse_knot_expr("-T(2,3)").terms[0].negated);
}

TEST_CASE("parse errors") {
  CHECK(parse_error_column("T(2,3") == 6);
  CHECK(parse_error_column("T(2,3) +") == 9);
  CHECK(parse_error_column("Q(1)") == 1);
  CHECK(parse_error_column("T(2,3) T(2,3)") == 8);
  try {
    parse_knot_expr("T(2,3");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("end of input") != std::string::npos);
  }
}

TEST_CASE("atom parameters") {
  CHECK(atom_params(parse_knot_expr("T(3,4)").terms[0].atom) == Params{1, -2, 2, -1});
  CHECK(atom_params(parse_knot_expr("D").terms[0].atom) == Params{1, -1});
  CHECK(atom_params(parse_knot_expr("Thin(2)").terms[0].atom) == Params{1, -1, 1, -1});
  CHECK(atom_params(parse_knot_expr("Thin(-1)").terms[0].atom) == Params{-1, 1});
  CHECK(atom_params(parse_knot_expr("Thin(0)").terms[0].atom).empty());
  CHECK(atom_delta(parse_knot_expr("Cable(D;2,3)").terms[0].atom) == parse_poly("t^6-t^5+t^3-t+1"));
  CHECK_THROWS_AS(atom_params(parse_knot_expr("Cable(Thin(1);2,3)").terms[0].atom), Error);
}

TEST_CASE("summands") {
  const auto s = summand_params(parse_knot_expr("2*T(2,3) - Std(1,-2,2,-1)"));
  REQUIRE(s.size() == 3);
  CHECK(s[0] == Params{1, -1});
  CHECK(s[1] == Params{1, -1});
  CHECK(s[2] == Params{-1, 2, -2, 1});
  CHECK(materialize(parse_knot_expr("T(2,3) + T(2,3)")).size() == 9);
}

TEST_CASE("evaluation") {
  CHECK(eval_recipe("T(2,3) - T(2,3)").params.empty());
  CHECK(eval_recipe("2*T(2,3)").params == eval_recipe("T(2,3) + T(2,3)").params);
  CHECK(eval_recipe("T(3,4)").params == Params{1, -2, 2, -1});
  CHECK(eval_recipe("Thin(-3)").params == Params{-1, 1, -1, 1, -1, 1});
  CHECK(phi(eval_recipe("Cable(D;2,3) - T(2,3)").params) == std::map<int, int>{{2, 1}});
}

TEST_CASE("incremental folding matches the full tensor product") {
  for (const char* text : {"T(2,3) + T(2,5)", "T(3,4) - 2*T(2,3)", "Std(2,-2) + Std(-1,1)"}) {
    const KnotExpr e = parse_knot_expr(text);
    CHECK_MESSAGE(eval_recipe(e).params == standard_rep(materialize(e)).params, text);
  }
}
