#include <doctest.h>

#include "clockfree/errors.hpp"
#include "clockfree/graph_ops.hpp"
#include "clockfree/isomorphism.hpp"
#include "clockfree/obstructions.hpp"
#include "clockfree/patterns.hpp"
#include "clockfree/treewidth.hpp"

using namespace clockfree;

namespace {

Graph cycle(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return b.build();
}

}  // namespace

TEST_CASE("complete graphs and walls have treewidth t") {
  for (int t = 1; t <= 4; ++t) CHECK(exact_treewidth(complete_graph(t + 1)).width == t);
  CHECK(wall(1) == Graph(2, {{0, 1}}));
  CHECK(are_isomorphic(wall(2), cycle(6)));
  for (int t = 2; t <= 3; ++t) CHECK(exact_treewidth(wall(t)).width == t);
  CHECK(exact_treewidth(complete_bipartite(3, 3)).width == 3);
}

TEST_CASE("wall shape") {
  Graph w = wall(3);
  CHECK(w.order() == 16);
  CHECK(w.size() == 19);
  for (int v = 0; v < w.order(); ++v) {
    CHECK(w.degree(v) >= 2);
    CHECK(w.degree(v) <= 3);
  }
}

TEST_CASE("subdivided walls and their line graphs") {
  Graph s = subdivided_wall(2, 1);
  CHECK(is_subdivision_of(s, wall(2)));
  CHECK(!is_subdivision_of(complete_graph(4), wall(2)));
  Graph l = line_of_wall(2, 0);
  auto root = recover_root_graph(l);
  REQUIRE(root);
  CHECK(are_isomorphic(line_graph(*root).graph, l));
}

TEST_CASE("root graph of a triangle uses the fewest cliques") {
  auto r = recover_root_graph(complete_graph(3));
  REQUIRE(r);
  CHECK(are_isomorphic(*r, complete_bipartite(1, 3)));
  CHECK(are_isomorphic(line_graph(*r).graph, complete_graph(3)));
  CHECK(are_isomorphic(line_graph(complete_graph(3)).graph, complete_graph(3)));
  CHECK(!recover_root_graph(complete_bipartite(1, 3)));
}

TEST_CASE("cleanness") {
  CleanResult k4 = is_t_clean(complete_graph(4), 3);
  CHECK(!k4.clean);
  CHECK(k4.family == "complete");
  CHECK(is_t_clean(cycle(8), 3).clean);
  CleanResult w = is_t_clean(wall(3), 3);
  CHECK(!w.clean);
  // C6 is the 2-wall under the calibrated convention
  CHECK(!is_t_clean(cycle(6), 2).clean);
  CHECK(!is_t_clean(complete_bipartite(3, 3), 3).clean);
  CHECK_THROWS_AS(is_t_clean(cycle(kCleanCap + 1), 3), ScaleError);
}

TEST_CASE("Pohoata-Davies graphs") {
  CHECK(are_isomorphic(pohoata_davies(1), cycle(5)));
  CHECK(pohoata_davies(2).order() == 13);
  CHECK(pohoata_davies(3).order() == 29);
  int expected_tw[] = {2, 2, 3};
  for (int h = 1; h <= 3; ++h) {
    Graph g = pohoata_davies(h);
    CHECK(!find_pattern(g, Pattern::wheel));
    CHECK(has_clock(g) == (h >= 2));
    CHECK(is_t_clean(g, 3).clean);
    CHECK(exact_treewidth(g).width == expected_tw[h - 1]);
  }
}

TEST_CASE("three-path generators") {
  Graph t = theta_graph({2, 2, 2});
  CHECK(are_isomorphic(t, complete_bipartite(2, 3)));
  Graph p = prism_graph({1, 1, 1});
  CHECK(p.order() == 6);
  CHECK(p.size() == 9);
  Graph y = pyramid_graph({1, 2, 2});
  CHECK(y.order() == 6);
  CHECK_THROWS_AS(pyramid_graph({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(theta_graph({1, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(generate_obstruction(ObstructionKind::wall, ObstructionParams{0}), std::invalid_argument);
}
