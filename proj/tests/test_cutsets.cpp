#include <doctest.h>

#include "clockfree/cutsets.hpp"
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

PatternWitness paw(int a, int a2, int v, int u) {
  PatternWitness w;
  w.kind = "paw";
  w.roles = {{"a", {a}}, {"a_prime", {a2}}, {"v", {v}}, {"u", {u}}};
  return w;
}

PatternWitness seagull(int a, int v, int u) {
  PatternWitness w;
  w.kind = "seagull";
  w.roles = {{"a", {a}}, {"v", {v}}, {"u", {u}}};
  return w;
}

}  // namespace

TEST_CASE("star cutset agrees with the exhaustive oracle on all graphs up to 7 vertices") {
  int disagreements = 0;
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n, true)) {
      auto fast = find_star_cutset(g);
      auto slow = find_star_cutset_exhaustive(g);
      if (fast.has_value() != slow.has_value()) ++disagreements;
      if (fast && !certifies_split(g, *fast)) ++disagreements;
      if (fast && !(g.closed_neighbours(fast->center).contains(fast->center) &&
                    fast->X.is_subset_of(g.closed_neighbours(fast->center))))
        ++disagreements;
    }
  CHECK(disagreements == 0);
}

TEST_CASE("star cutsets on fixtures") {
  CHECK(!find_star_cutset(cycle(6)));
  Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  auto s = find_star_cutset(p4);
  REQUIRE(s);
  CHECK(s->X == VertexSet{1});
}

TEST_CASE("bow-tie clique cutset is the shared vertex") {
  Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  auto c = find_clique_cutset(bowtie);
  REQUIRE(c);
  CHECK(c->X == VertexSet{2});
  CHECK(certifies_split(bowtie, *c));
  auto atoms = atoms_of(clique_atoms(bowtie));
  REQUIRE(atoms.size() == 2);
  CHECK(atoms[0] == VertexSet{0, 1, 2});
  CHECK(atoms[1] == VertexSet{2, 3, 4});
}

TEST_CASE("disconnected graphs have the empty clique cutset") {
  auto c = find_clique_cutset(Graph(3, {{0, 1}}));
  REQUIRE(c);
  CHECK(c->X.empty());
  CHECK(!find_clique_cutset(cycle(5)));
}

TEST_CASE("separates") {
  Graph g = cycle(6);
  CHECK(separates(g, VertexSet{0, 3}, VertexSet{1}, VertexSet{4}));
  CHECK(!separates(g, VertexSet{0}, VertexSet{1}, VertexSet{4}));
}

TEST_CASE("paw cutset on the prism fixture") {
  // triangles a1 a2 a3 = 0 1 2, b1 b2 b3 = 3 4 5
  Graph g = prism_graph({1, 1, 1});
  TheoremSearchResult r = paw_cutset_witness(g, paw(1, 2, 0, 3));
  REQUIRE(r.status == SearchStatus::found);
  CHECK(r.witness->b == 5);
  CHECK(r.witness->K == VertexSet{4, 5});
  CHECK(r.witness->X == VertexSet{0, 4, 5});
  CHECK(separates(g, r.witness->X, VertexSet{3}, VertexSet{1, 2}));
}

TEST_CASE("seagull cutset on the theta fixture") {
  // theta with ends 0, 1 and paths of length 3
  Graph g = theta_graph({3, 3, 3});
  TheoremSearchResult r = seagull_cutset_witness(g, seagull(0, 2, 3), TheoremSearchOptions{true, true});
  REQUIRE(r.status == SearchStatus::found);
  CHECK(r.witness->b == 1);
  CHECK(r.witness->K == VertexSet{1});
  REQUIRE(r.three_path);
  CHECK(witness_valid(g, *r.three_path));
}

TEST_CASE("theorem searches report hypothesis violations") {
  // the seagull center sits on a star cutset here
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
  TheoremSearchResult r = seagull_cutset_witness(g, seagull(1, 2, 3));
  CHECK(r.status == SearchStatus::hypothesis_violation);
  CHECK(!r.violation.empty());
  CHECK_THROWS_AS(paw_cutset_witness(cycle(4), paw(0, 1, 2, 3)), std::invalid_argument);
}
