#include <doctest.h>

#include <algorithm>
#include <set>
#include <tuple>

#include "knotlike/error.hpp"
#include "knotlike/homology.hpp"
#include "knotlike/standard.hpp"
#include "support.hpp"

using namespace knotlike;
using knotlike::testing::fixture;

namespace {

using Pair = std::tuple<std::string, std::string, int>;

std::set<Pair> named_pairs(const Complex& c, const std::vector<TorsionPair>& pairs) {
  std::set<Pair> out;
  for (const auto& p : pairs) out.insert({c.generator(p.source).name, c.generator(p.target).name, p.eta});
  return out;
}

}  // namespace

TEST_CASE("C(1,-2,2,-1) mod V") {
  const Complex c = fixture("fig1.cx");
  const TowerReport r = simplify(c, Side::ModV);
  CHECK(c.generator(r.tower).name == "x4");
  CHECK(r.tower_top == Bigrading{-6, 0});
  CHECK(named_pairs(c, r.torsion_pairs) == std::set<Pair>{{"x1", "x0", 1}, {"x3", "x2", 2}});
  CHECK(r.max_eta() == 2);
}

TEST_CASE("C(1,-2,2,-1) mod U") {
  const Complex c = fixture("fig1.cx");
  const TowerReport r = simplify(c, Side::ModU);
  CHECK(c.generator(r.tower).name == "x0");
  CHECK(r.tower_top == Bigrading{0, -6});
  CHECK(named_pairs(c, r.torsion_pairs) == std::set<Pair>{{"x1", "x2", 2}, {"x3", "x4", 1}});
}

TEST_CASE("five-generator complex") {
  const Complex c = fixture("fig2.cx");
  const TowerReport u = simplify(c, Side::ModU);
  CHECK(c.generator(u.tower).name == "e");
  CHECK(named_pairs(c, u.torsion_pairs) == std::set<Pair>{{"b", "c", 3}, {"a", "d", 3}});
  const TowerReport v = simplify(c, Side::ModV);
  CHECK(c.generator(v.tower).name == "e");
  CHECK(named_pairs(c, v.torsion_pairs) == std::set<Pair>{{"b", "a", 3}, {"c", "d", 3}});
  CHECK(u.tower_support() == std::vector<std::size_t>{0});
}

TEST_CASE("C(1,-1) towers sit at the two ends") {
  const Complex c = build_standard({1, -1});
  const TowerReport v = simplify(c, Side::ModV);
  CHECK(v.tower == 2);
  const TowerReport u = simplify(c, Side::ModU);
  CHECK(u.tower == 0);
}

TEST_CASE("simplify rejects unreduced complexes and two towers") {
  CHECK_THROWS_AS(simplify(fixture("acyclic_pair.cx"), Side::ModU), NotReducedError);
  CHECK_THROWS_AS(simplify(fixture("two_towers.cx"), Side::ModU), MultipleTowersError);
  const Simplification s = simplify_all(fixture("two_towers.cx"), Side::ModV);
  CHECK(s.free_elements.size() == 2);
}

TEST_CASE("knot-like checks") {
  const KnotLikeReport ok = check_knot_like(fixture("fig2.cx"), false);
  CHECK(ok.is_knot_like);

  const KnotLikeReport shifted = check_knot_like(fixture("fig2_shifted.cx"), false);
  CHECK_FALSE(shifted.is_knot_like);
  const KnotLikeReport allowed = check_knot_like(fixture("fig2_shifted.cx"), true);
  CHECK(allowed.is_knot_like);
  CHECK(allowed.shift_u == -3);
  CHECK(allowed.shift_v == 5);

  const KnotLikeReport two = check_knot_like(fixture("two_towers.cx"), true);
  CHECK_FALSE(two.is_knot_like);
  CHECK(two.reasons.size() == 2);

  CHECK(normalize(fixture("fig2_shifted.cx")) == fixture("fig2.cx"));
  CHECK_THROWS_AS(normalize(fixture("two_towers.cx")), NotKnotLikeError);
}

TEST_CASE("normalize reduces first") {
  const Complex n = normalize(fixture("acyclic_pair.cx"));
  REQUIRE(n.size() == 1);
  CHECK(n.generator(0).grading == Bigrading{0, 0});
}

TEST_CASE("torsion bounds") {
  CHECK(torsion_bounds(fixture("fig1.cx")).m_u == 2);
  CHECK(torsion_bounds(fixture("fig1.cx")).m_v == 2);
  const TorsionBounds t = torsion_bounds(tensor(build_standard({2, -2}), build_standard({1, -1})));
  CHECK(t.m_u == 2);
  CHECK(t.m_v == 2);
  CHECK(torsion_bounds(Complex()).m_u == 0);
  CHECK(torsion_bounds(Complex()).m_v == 0);
  CHECK(torsion_bounds(fixture("fig2.cx")).m_u == 3);
}

TEST_CASE("standard complexes are knot-like") {
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Params p = knotlike::testing::random_params(rng, 8, 3);
    const KnotLikeReport r = check_knot_like(build_standard(p), false);
    CHECK_MESSAGE(r.is_knot_like, format_params(p));
  }
}
