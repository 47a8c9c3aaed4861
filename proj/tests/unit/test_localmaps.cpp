#include <doctest.h>

#include "knotlike/error.hpp"
#include "knotlike/localmaps.hpp"
#include "support.hpp"

using namespace knotlike;
using knotlike::testing::all_params;

TEST_CASE("maps between R and C(1,-1)") {
  const Complex r;
  const Complex c = build_standard({1, -1});
  const auto up = exists_local_map(r, c);
  REQUIRE(up.has_value());
  CHECK(verify_local_map(r, c, *up));
  CHECK_FALSE(exists_local_map(c, r).has_value());
  CHECK_FALSE(brute_force_local_map(c, r).has_value());
  CHECK(brute_force_local_map(r, r).has_value());
}

TEST_CASE("identity maps") {
  for (const Params& p : all_params(4, 2)) {
    const Complex c = build_standard(p);
    const auto w = exists_local_map(c, c);
    REQUIRE_MESSAGE(w.has_value(), format_params(p));
    CHECK(w->v_shift == 0);
    CHECK(verify_local_map(c, c, *w));
  }
}

TEST_CASE("short maps into C(1,-1)") {
  const Complex c = build_standard({1, -1});
  const auto w = exists_short_local_map({1}, c);
  REQUIRE(w.has_value());
  CHECK(verify_short_local_map({1}, c, *w));
  CHECK(brute_force_short_local_map({1}, c).has_value());

  CHECK_FALSE(exists_short_local_map({1, 1}, c).has_value());
  CHECK_FALSE(brute_force_short_local_map({1, 1}, c).has_value());
}

TEST_CASE("prefixes of a standard complex map into it") {
  const Params p{1, -2, 2, -1};
  const Complex c = build_standard(p);
  for (std::size_t k = 1; k <= p.size(); ++k) {
    const Params prefix(p.begin(), p.begin() + static_cast<long>(k));
    const auto w = exists_short_local_map(prefix, c);
    REQUIRE_MESSAGE(w.has_value(), format_params(prefix));
    CHECK(verify_short_local_map(prefix, c, *w));
  }
}

TEST_CASE("short relaxation by parity") {
  CHECK(short_relaxation(1) == Relaxation::KeepU);
  CHECK(short_relaxation(2) == Relaxation::KeepV);
}

TEST_CASE("targets must be knot-like and normalized") {
  CHECK_THROWS_AS(LocalMapTarget(knotlike::testing::fixture("two_towers.cx")), NotKnotLikeError);
  CHECK_THROWS_AS(LocalMapTarget(knotlike::testing::fixture("fig2_shifted.cx")), NotKnotLikeError);
}

TEST_CASE("solver and oracle agree on small standard pairs") {
  const auto params = all_params(2, 2);
  for (const Params& a : params) {
    for (const Params& b : params) {
      const Complex s = build_standard(a);
      const Complex c = build_standard(b);
      CHECK(LocalMapTarget(c).count_unknowns(s) == oracle_unknowns(s, c));
      const auto fast = exists_local_map(s, c);
      const auto slow = brute_force_local_map(s, c);
      CHECK_MESSAGE(fast.has_value() == slow.has_value(), format_params(a), " -> ", format_params(b));
      if (fast) CHECK(verify_local_map(s, c, *fast));
      if (slow) CHECK(verify_local_map(s, c, *slow));
    }
  }
}

TEST_CASE("solver and oracle agree on short maps") {
  std::vector<Params> prefixes;
  for (int a : {1, -1, 2, -2}) {
    prefixes.push_back({a});
    for (int b : {1, -1, 2, -2}) prefixes.push_back({a, b});
  }
  for (const Params& target : all_params(4, 2)) {
    const Complex c = build_standard(target);
    for (const Params& p : prefixes) {
      const auto fast = exists_short_local_map(p, c);
      const auto slow = brute_force_short_local_map(p, c);
      CHECK_MESSAGE(fast.has_value() == slow.has_value(), format_params(p), " -> ", format_params(target));
      if (fast) CHECK(verify_short_local_map(p, c, *fast));
    }
  }
}

TEST_CASE("oracle budget") {
  const Complex big = tensor(build_standard({1, -2, 2, -1}), build_standard({1, -2, 2, -1}));
  CHECK_THROWS_AS(brute_force_local_map(big, big, 4), BudgetExceededError);
}

TEST_CASE("maps into a non-standard target") {
  const Complex f2 = knotlike::testing::fixture("fig2.cx");
  CHECK(exists_local_map(Complex(), f2).has_value());
  CHECK(exists_local_map(f2, Complex()).has_value());
  CHECK(brute_force_local_map(f2, Complex()).has_value());
}
