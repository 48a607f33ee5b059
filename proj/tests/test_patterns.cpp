#include <doctest.h>

#include "clockfree/graph_ops.hpp"
#include "clockfree/harness.hpp"
#include "clockfree/obstructions.hpp"
#include "clockfree/patterns.hpp"

using namespace clockfree;

namespace {

Graph cycle(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return b.build();
}

Graph with_hub(const Graph& g, const std::vector<int>& nbrs) {
  GraphBuilder b(g);
  int h = b.add_vertex();
  for (int v : nbrs) b.add_edge(h, v);
  return b.build();
}

// Brute force: some set of at least four vertices induces a cycle and a vertex
// outside it has two non-adjacent neighbours on it.
bool oracle_clock(const Graph& g) {
  int n = g.order();
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    VertexSet C;
    for (int v = 0; v < n; ++v)
      if (m >> v & 1) C.insert(v);
    if (C.size() < 4 || !is_connected(g, C)) continue;
    bool cyc = true;
    for (int v : C)
      if ((g.neighbours(v) & C).size() != 2) cyc = false;
    if (!cyc) continue;
    for (int x = 0; x < n; ++x) {
      if (C.contains(x)) continue;
      VertexSet N = g.neighbours(x) & C;
      if (!g.is_clique(N)) return true;
    }
  }
  return false;
}

bool oracle_diamond(const Graph& g) {
  int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (g.edges_within(VertexSet{a, b, c, d}) == 5) return true;
  return false;
}

}  // namespace

TEST_CASE("diamond detection") {
  Graph d(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  auto w = find_pattern(d, Pattern::diamond);
  REQUIRE(w);
  CHECK(witness_valid(d, *w));
  CHECK(w->role("spine") == std::vector<int>{0, 1});
  CHECK(!find_pattern(complete_graph(4), Pattern::diamond));
  CHECK(!find_pattern(cycle(4), Pattern::diamond));
}

TEST_CASE("clock and wheel on small fixtures") {
  CHECK(!has_clock(cycle(6)));
  Graph c6x = with_hub(cycle(6), {0, 2});
  auto ck = find_pattern(c6x, Pattern::clock);
  REQUIRE(ck);
  CHECK(witness_valid(c6x, *ck));
  CHECK(!find_pattern(c6x, Pattern::wheel));
  Graph w5 = with_hub(cycle(5), {0, 1, 2, 3, 4});
  auto wh = find_pattern(w5, Pattern::wheel);
  REQUIRE(wh);
  CHECK(witness_valid(w5, *wh));
  // a hub with two adjacent neighbours is not a clock
  CHECK(!has_clock(with_hub(cycle(5), {0, 1})));
}

TEST_CASE("t-clock needs two neighbours far apart on the hole") {
  Graph g = with_hub(cycle(8), {0, 2});
  CHECK(find_pattern(g, PatternKind{Pattern::t_clock, 2}));
  CHECK(!find_pattern(g, PatternKind{Pattern::t_clock, 3}));
  Graph h = with_hub(cycle(8), {0, 4});
  auto w = find_pattern(h, PatternKind{Pattern::t_clock, 4});
  REQUIRE(w);
  CHECK(witness_valid(h, *w));
}

TEST_CASE("clock and diamond detection agree with brute force on all graphs up to 7 vertices") {
  int disagreements = 0;
  for (int n = 4; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n, false)) {
      if (has_clock(g) != oracle_clock(g)) ++disagreements;
      if (has_diamond(g) != oracle_diamond(g)) ++disagreements;
    }
  CHECK(disagreements == 0);
}

TEST_CASE("paw, seagull and claw") {
  Graph paw(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  auto p = find_pattern(paw, Pattern::paw);
  REQUIRE(p);
  CHECK(witness_valid(paw, *p));
  auto s = find_pattern(Graph(3, {{0, 1}, {1, 2}}), Pattern::seagull);
  REQUIRE(s);
  CHECK(s->role("v") == std::vector<int>{1});
  Graph claw(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(is_claw_center(claw, 0));
  CHECK(!is_claw_center(claw, 1));
  CHECK(claw_triple(claw, 0) == std::vector<int>{1, 2, 3});
}

TEST_CASE("three-path configurations on generated fixtures") {
  for (auto [kind, g] : {std::pair{"theta", theta_graph({2, 2, 3})}, std::pair{"pyramid", pyramid_graph({1, 2, 2})},
                         std::pair{"prism", prism_graph({1, 1, 2})}}) {
    auto w = find_pattern(g, Pattern::three_path_config);
    REQUIRE(w);
    CHECK(w->kind == kind);
    CHECK(witness_valid(g, *w));
  }
  auto sp = find_pattern(pyramid_graph({1, 2, 3}), Pattern::short_pyramid);
  REQUIRE(sp);
  CHECK(!find_pattern(pyramid_graph({2, 2, 3}), Pattern::short_pyramid));
}

TEST_CASE("short pyramids contain clocks") {
  for (int l2 = 2; l2 <= 4; ++l2)
    for (int l3 = l2; l3 <= 4; ++l3) CHECK(has_clock(pyramid_graph({1, l2, l3})));
}

TEST_CASE("witness checker rejects tampered witnesses") {
  Graph g = with_hub(cycle(6), {0, 2});
  auto w = find_pattern(g, Pattern::clock);
  REQUIRE(w);
  PatternWitness bad = *w;
  bad.roles["center"] = {bad.role("hole").front()};
  CHECK(!witness_valid(g, bad));
}

TEST_CASE("minimal connector outcomes are consistent") {
  Graph g = theta_graph({2, 2, 2});
  // ends 0 and 1, middles 2, 3, 4; connect the three middles avoiding nothing else
  MinimalConnector c = minimal_connector(g, 2, 3, 4);
  CHECK(check_connector(g, c).empty());
  CHECK_THROWS_AS(minimal_connector(Graph(3), 0, 1, 2), std::invalid_argument);
}

TEST_CASE("near-simplicial witness") {
  Graph g(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(near_simplicial_witness(g, 1));
  CHECK(near_simplicial_witness(Graph(1), 0) == 0);
  CHECK(is_simplicial(g, 2));
  CHECK(!is_simplicial(g, 1));
}

TEST_CASE("chordality") {
  CHECK(is_chordal(complete_graph(5)));
  CHECK(!is_chordal(cycle(4)));
}
