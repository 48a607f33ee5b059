#include <doctest.h>

#include "clockfree/errors.hpp"
#include "clockfree/harness.hpp"
#include "clockfree/obstructions.hpp"
#include "clockfree/separations.hpp"
#include "clockfree/treewidth.hpp"

using namespace clockfree;

namespace {

Graph cycle(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return b.build();
}

Graph grid(int r, int c) {
  GraphBuilder b(r * c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      if (j + 1 < c) b.add_edge(i * c + j, i * c + j + 1);
      if (i + 1 < r) b.add_edge(i * c + j, (i + 1) * c + j);
    }
  return b.build();
}

// Treewidth as the minimum over all elimination orders.
int oracle_treewidth(const Graph& g) {
  std::vector<int> order(g.order());
  for (int i = 0; i < g.order(); ++i) order[i] = i;
  int best = g.order();
  do best = std::min(best, elimination_width(g, order));
  while (std::next_permutation(order.begin(), order.end()));
  return best;
}

}  // namespace

TEST_CASE("exact treewidth of standard graphs") {
  CHECK(exact_treewidth(Graph(0)).width == -1);
  CHECK(exact_treewidth(Graph(3)).width == 0);
  CHECK(exact_treewidth(Graph(4, {{0, 1}, {1, 2}, {2, 3}})).width == 1);
  CHECK(exact_treewidth(cycle(7)).width == 2);
  CHECK(exact_treewidth(grid(3, 3)).width == 3);
  CHECK(exact_treewidth(grid(4, 4)).width == 4);
  CHECK(exact_treewidth(complete_bipartite(2, 5)).width == 2);
}

TEST_CASE("exact treewidth agrees with brute force over orders on all graphs of 6 vertices") {
  int bad = 0;
  for (const Graph& g : enumerate_graphs(6, false)) {
    TreewidthResult r = exact_treewidth(g);
    if (r.width != oracle_treewidth(g)) ++bad;
    if (!validate_decomposition(g, r.decomposition).ok || r.decomposition.width() != r.width) ++bad;
    if (elimination_width(g, r.order) != r.width) ++bad;
  }
  CHECK(bad == 0);
}

TEST_CASE("bounds sandwich the exact value") {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    Graph g = random_graph(10, 0.4, rng);
    int tw = exact_treewidth(g).width;
    CHECK(minor_min_width(g) <= tw);
    CHECK(min_fill_upper_bound(g) >= tw);
  }
}

TEST_CASE("validation reports the failed axiom") {
  Graph g = cycle(4);
  TreeDecomposition td;
  td.bags = {VertexSet{0, 1, 2}, VertexSet{0, 2, 3}};
  td.edges = {{0, 1}};
  CHECK(validate_decomposition(g, td).ok);
  TreeDecomposition missing = td;
  missing.bags[1] = VertexSet{0, 2};
  CHECK(validate_decomposition(g, missing).axiom == 1);
  TreeDecomposition no_edge;
  no_edge.bags = {VertexSet{0, 1, 2}, VertexSet{1, 2, 3}};
  no_edge.edges = {{0, 1}};
  CHECK(validate_decomposition(g, no_edge).axiom == 2);
  TreeDecomposition split;
  split.bags = {VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{2, 3}, VertexSet{3, 0}};
  split.edges = {{0, 1}, {1, 2}, {2, 3}};
  CHECK(validate_decomposition(g, split).axiom == 3);
  TreeDecomposition cyclic = split;
  cyclic.edges.push_back({3, 0});
  CHECK(validate_decomposition(g, cyclic).axiom == 0);
}

TEST_CASE("decomposition from separators stays within 3k") {
  CHECK(separator_decomposition_bound(1, kHalf) == 3);
  CHECK(separator_decomposition_bound(3, kHalf) == 9);
  Rng rng(11);
  for (int i = 0; i < 40; ++i) {
    int n = 6 + i % 7;
    Graph g = random_graph(n, 0.35, rng);
    int k = exact_treewidth(g).width + 1;
    SeparatorOracle oracle = [&](const Weighting& w) { return *minimum_balanced_separator(g, w, kHalf); };
    TreeDecomposition td = decomposition_from_separators(g, oracle, k, kHalf);
    CHECK(validate_decomposition(g, td).ok);
    CHECK(td.width() <= 3 * k);
  }
}

TEST_CASE("a bag of any decomposition is found as a balanced separator") {
  Graph g = grid(3, 4);
  TreeDecomposition td = exact_treewidth(g).decomposition;
  Weighting w = Weighting::uniform(g.order());
  VertexSet s = separator_from_decomposition(g, td, w, kHalf);
  CHECK(is_balanced_separator(g, w, s, kHalf));
}

TEST_CASE("minimum balanced separator") {
  Graph g = cycle(6);
  auto s = minimum_balanced_separator(g, Weighting::uniform(6), kHalf);
  REQUIRE(s);
  CHECK(*s == VertexSet{0, 2});
  CHECK(!minimum_balanced_separator(complete_graph(4), Weighting::uniform(4), kHalf, 1));
  // weight concentrated on one vertex forces it into the separator
  Weighting heavy = Weighting::from_numerators({1, 1, 1, 1, 1, 6}, 11);
  auto h = minimum_balanced_separator(g, heavy, kHalf);
  REQUIRE(h);
  CHECK(h->contains(5));
}

TEST_CASE("atoms decomposition and gamma") {
  Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  TreeDecomposition td = decomposition_from_atoms(bowtie);
  CHECK(validate_decomposition(bowtie, td).ok);
  CHECK(td.width() == 2);
  CHECK(gamma_d(complete_graph(4), 3) >= 1);
}

TEST_CASE("scale caps") {
  CHECK(exact_treewidth(grid(5, 5)).width == 5);
  CHECK_THROWS_AS(exact_treewidth(complete_bipartite(12, 12)), ScaleError);
  CHECK(exact_treewidth(cycle(40)).width == 2);
}
