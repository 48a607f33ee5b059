#include <doctest.h>

#include "clockfree/errors.hpp"
#include "clockfree/harness.hpp"
#include "clockfree/patterns.hpp"
#include "clockfree/separations.hpp"
#include "clockfree/serialize.hpp"

using namespace clockfree;

namespace {

Graph cycle(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return b.build();
}

Graph path(int n) {
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return b.build();
}

// C6 on v1..v6 = 0..5, w(v4) = 3/5, every other vertex 2/25
Weighting c6_weights() { return Weighting::from_numerators({2, 2, 2, 15, 2, 2}, 25); }

// P7 on v1..v7 = 0..6, w(v7) = 3/5, every other vertex 1/15
Weighting p7_weights() { return Weighting::from_numerators({1, 1, 1, 1, 1, 1, 9}, 15); }

}  // namespace

TEST_CASE("balanced separators on C6") {
  Graph g = cycle(6);
  Weighting u = Weighting::uniform(6);
  CHECK(is_balanced_separator(g, u, VertexSet{0, 3}, kHalf));
  CHECK(is_balanced_separator(g, u, VertexSet{0, 2}, kHalf));
  CHECK(!is_balanced_separator(g, u, VertexSet{0}, kHalf));
  CHECK(!is_balanced_separator(g, u, VertexSet{0, 1}, kHalf));
  CHECK(is_balanced_separator(g, u, VertexSet{0, 1}, Rational(2, 3)));
  CHECK(heavy_component(g, u, VertexSet{0}) == VertexSet{1, 2, 3, 4, 5});
  CHECK(!heavy_component(g, u, VertexSet{0, 3}));
}

TEST_CASE("canonical separation") {
  Graph g = cycle(6);
  Separation s = canonical_separation(g, c6_weights(), VertexSet{2, 4});
  CHECK(s.C == VertexSet{2, 4});
  CHECK(s.B == VertexSet{3});
  CHECK(s.A == VertexSet{0, 1, 5});
  CHECK_THROWS_AS(canonical_separation(g, Weighting::uniform(6), VertexSet{0, 3}), BalancedInputError);
}

TEST_CASE("clique extension") {
  // K4 minus nothing: the extension of an edge picks up the common neighbours
  Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(clique_extension(k4, VertexSet{0, 1}, VertexSet{2, 3}) == VertexSet{0, 1, 2, 3});
  CHECK(clique_extension(k4, VertexSet{0}, VertexSet{1, 2, 3}) == VertexSet{0});
  Graph diamond(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  try {
    clique_extension(diamond, VertexSet{0, 1}, VertexSet{2, 3});
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    PatternWitness w = witness_from_json(e.witness());
    CHECK(witness_valid(diamond, w));
  }
}

TEST_CASE("P7 family, core and central bag") {
  Graph g = path(7);
  Weighting w = p7_weights();
  auto family = family_X(g, w);
  std::vector<VertexSet> xs;
  for (const CliquePair& p : family) xs.push_back(p.X());
  CHECK(xs == std::vector<VertexSet>{VertexSet{0}, VertexSet{1}, VertexSet{2}, VertexSet{3}, VertexSet{4}, VertexSet{5}});
  CHECK(is_shield(g, w, VertexSet{2}, VertexSet{1}));
  CHECK(!is_shield(g, w, VertexSet{1}, VertexSet{2}));
  auto core = core_of(g, w, family);
  REQUIRE(core.size() == 1);
  CHECK(core[0].X() == VertexSet{5});
  ExtendedBag bag = central_bag(g, w, core);
  CHECK(bag.beta == VertexSet{5, 6});
  CHECK(bag.assignment_ok);
}

TEST_CASE("C6/W6 worked example") {
  Graph g = cycle(6);
  Weighting w = c6_weights();
  auto family = family_X(g, w);
  bool has_24 = false;
  for (const CliquePair& p : family) has_24 |= p.X() == VertexSet{2, 4};
  CHECK(has_24);
  auto core = core_of(g, w, family);
  REQUIRE(core.size() == 1);
  CHECK(core[0].X() == VertexSet{2, 4});
  ExtendedBag bag = central_bag(g, w, core);
  CHECK(bag.beta == VertexSet{2, 3, 4});
  bag = extend_bag(g, w, bag);
  CHECK(bag.core[0].marker.vertices == std::vector<int>{2, 1, 0, 5, 4});
  CHECK(bag.core[0].anchor == 0);
  CHECK(bag.w_star.at(0) == Rational(6, 25));
  CHECK(bag.w_star.at(1) == Rational(0));
  CHECK(bag.w_star.at(3) == Rational(3, 5));
  LiftResult one = lift_separator(g, w, bag, VertexSet{3}, 3);
  CHECK(one.Y == VertexSet{2, 3, 4});
  CHECK(one.verified);
  LiftResult two = lift_separator(g, w, bag, VertexSet{0, 3}, 3);
  CHECK(two.Y == VertexSet{0, 2, 3, 4});
  CHECK(two.records[0].rule == "marker");
  CHECK(two.within_bound);
}

TEST_CASE("closure is idempotent and keeps B") {
  Graph g = cycle(6);
  Weighting w = c6_weights();
  CliquePair p = closure(g, w, VertexSet{1, 2}, VertexSet{4});
  CliquePair q = closure(g, w, p.K1, p.K2);
  CHECK(p.X() == q.X());
  CHECK(canonical_separation(g, w, p.X()).B == canonical_separation(g, w, VertexSet{1, 2, 4}).B);
  CliquePair e = closure(g, w, VertexSet{}, VertexSet{2});
  CHECK(e.K2.empty());
}

TEST_CASE("shield relation is a strict partial order on random instances") {
  Rng rng(3);
  int violations = 0;
  for (int i = 0; i < 60; ++i) {
    Graph g = random_diamond_free(8, 0.4, rng);
    Weighting w = random_weighting(8, rng);
    std::vector<CliquePair> family;
    try {
      family = family_X(g, w);
    } catch (const PreconditionError&) {
      continue;
    }
    for (const auto& a : family) {
      if (is_shield(g, w, a.X(), a.X())) ++violations;
      for (const auto& b : family) {
        if (is_shield(g, w, a.X(), b.X()) && is_shield(g, w, b.X(), a.X())) ++violations;
        for (const auto& c : family)
          if (is_shield(g, w, a.X(), b.X()) && is_shield(g, w, b.X(), c.X()) && !is_shield(g, w, a.X(), c.X()))
            ++violations;
      }
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("loose non-crossing") {
  Graph g = path(5);
  Weighting w = Weighting::from_numerators({0, 0, 0, 0, 1}, 1);
  Separation s1 = canonical_separation(g, w, VertexSet{1});
  Separation s2 = canonical_separation(g, w, VertexSet{2});
  CHECK(loosely_non_crossing(g, s1, s2));
  CHECK(loosely_non_crossing(g, s2, s1));
}

TEST_CASE("find_small_separator") {
  Graph g = cycle(6);
  SeparatorResult r = find_small_separator(g, Weighting::uniform(6), 3);
  CHECK(r.tier == 2);
  CHECK(r.separator == VertexSet{0, 2});
  CHECK(r.trace["verified"] == true);
  CHECK(r.trace.contains("symbolic"));
  Graph clock(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {6, 0}, {6, 2}});
  try {
    find_small_separator(clock, Weighting::uniform(7), 3);
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(witness_valid(clock, witness_from_json(e.witness())));
  }
  Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    Graph h = random_clock_free(10, 0.35, rng);
    Weighting w = random_weighting(10, rng);
    CHECK(is_balanced_separator(h, w, find_small_separator(h, w, 3).separator, kHalf));
  }
}
