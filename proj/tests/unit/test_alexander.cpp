#include <doctest.h>

#include <numeric>

#include "knotlike/alexander.hpp"
#include "knotlike/error.hpp"

using namespace knotlike;

namespace {

LaurentPoly P(const char* text) { return parse_poly(text); }

// Delta of T(p,q) from the exponent set {a p + b q : a, b >= 0} of its
// semigroup: Delta = 1 + (t - 1) sum_{s in gaps} t^s, independent of the
// division formula.
LaurentPoly semigroup_delta(int p, int q) {
  const int top = (p - 1) * (q - 1);
  std::vector<bool> in(top + 1, false);
  for (int a = 0; a * p <= top; ++a) {
    for (int b = 0; a * p + b * q <= top; ++b) in[a * p + b * q] = true;
  }
  LaurentPoly gaps;
  for (int s = 0; s < top; ++s) {
    if (!in[s]) gaps += LaurentPoly::monomial(1, s);
  }
  return LaurentPoly::constant(1) + (LaurentPoly::monomial(1, 1) - LaurentPoly::constant(1)) * gaps;
}

}  // namespace

TEST_CASE("polynomial text") {
  CHECK(format_poly(P("t^6-t^5+t^3-t+1")) == "t^6-t^5+t^3-t+1");
  CHECK(P("3t^2 - 2") == LaurentPoly::monomial(3, 2) - LaurentPoly::constant(2));
  CHECK(P("1") == LaurentPoly::constant(1));
  CHECK(P("t + t") == LaurentPoly::monomial(2, 1));
  CHECK(format_poly(P("t - t")) == "0");
  CHECK(format_poly(P("-t^2+2t")) == "-t^2+2t");
  CHECK_THROWS_AS(P("t^"), ParseError);
  CHECK_THROWS_AS(P("t^2 +"), ParseError);
  CHECK_THROWS_AS(P("x"), ParseError);
}

TEST_CASE("arithmetic") {
  const LaurentPoly a = P("t^2-t+1");
  const LaurentPoly b = P("t+1");
  CHECK(a * b == P("t^3+1"));
  CHECK((a * b).divide_exact(b) == a);
  CHECK_THROWS_AS(a.divide_exact(P("t-2")), InternalError);
  CHECK(a.substitute(2) == P("t^4-t^2+1"));
  CHECK(a.degree() == 2);
  CHECK(a.low_degree() == 0);
  CHECK(a.at_one() == 1);
  CHECK(a.coefficient(1) == -1);
  CHECK(a.coefficient(7) == 0);
}

TEST_CASE("torus knots") {
  CHECK(torus_delta(3, 4) == P("t^6-t^5+t^3-t+1"));
  CHECK(torus_delta(2, 3) == P("t^2-t+1"));
  CHECK(torus_delta(2, 5) == P("t^4-t^3+t^2-t+1"));
  CHECK(torus_delta(1, 7) == P("1"));
  CHECK_THROWS_AS(torus_delta(4, 6), NotCoprimeError);
  for (int p = 2; p <= 7; ++p) {
    for (int q = 2; q <= 9; ++q) {
      if (std::gcd(p, q) != 1) continue;
      CHECK(torus_delta(p, q) == torus_delta(q, p));
      CHECK(torus_delta(p, q) == semigroup_delta(p, q));
      CHECK(torus_delta(p, q).at_one() == 1);
    }
  }
}

TEST_CASE("cables") {
  CHECK(cable_delta(2, 5, torus_delta(2, 3)) == P("t^8-t^7+t^4-t+1"));
  CHECK(cable_delta(2, 3, torus_delta(2, 3)) == P("t^6-t^5+t^3-t+1"));
  CHECK(cable_delta(3, 4, P("1")) == torus_delta(3, 4));
}

TEST_CASE("staircases") {
  CHECK(staircase_params(P("t^6-t^5+t^3-t+1")) == Params{1, -2, 2, -1});
  CHECK(staircase_params(P("t^8-t^7+t^4-t+1")) == Params{1, -3, 3, -1});
  CHECK(staircase_params(P("1")).empty());
  CHECK(staircase_data(P("t^8-t^7+t^4-t+1")).c == std::vector<int>{1, 3});
  CHECK_THROWS_AS(staircase_data(P("t^2+1")), NotStaircaseError);
  CHECK_THROWS_AS(staircase_data(P("t^2-t")), NotStaircaseError);
  CHECK_THROWS_AS(staircase_data(P("t^5-t^4+t^2-t+1")), NotStaircaseError);
}

TEST_CASE("L-space phi") {
  CHECK(lspace_phi(torus_delta(3, 4)) == std::map<int, int>{{1, 1}, {2, 1}});
  CHECK(lspace_phi(torus_delta(5, 6)) == std::map<int, int>{{1, 1}, {2, 1}, {3, 1}, {4, 1}});
  CHECK(lspace_phi(cable_delta(4, 5, torus_delta(2, 3))) == std::map<int, int>{{1, 4}, {2, 1}, {4, 1}});
}
