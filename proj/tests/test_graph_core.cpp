#include <doctest.h>

#include <sstream>

#include "clockfree/errors.hpp"
#include "clockfree/graph_io.hpp"
#include "clockfree/graph_ops.hpp"
#include "clockfree/harness.hpp"
#include "clockfree/isomorphism.hpp"
#include "clockfree/serialize.hpp"
#include "clockfree/weighting.hpp"

using namespace clockfree;

namespace {

Graph cycle(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return b.build();
}

}  // namespace

TEST_CASE("vertex set operations and order") {
  VertexSet a{1, 3, 200}, b{3, 4};
  CHECK(a.size() == 3);
  CHECK((a & b) == VertexSet{3});
  CHECK((a | b).size() == 4);
  CHECK((a - b) == VertexSet{1, 200});
  CHECK(a.front() == 1);
  CHECK(a.back() == 200);
  CHECK(a.next(3) == 200);
  CHECK(VertexSet{}.front() == -1);
  CHECK(VertexSet{1, 2} < VertexSet{1, 3});
  CHECK(VertexSet{1} < VertexSet{1, 2});
  CHECK(VertexSet::range(5).to_vector() == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("graph6 known encodings") {
  CHECK(encode_graph6(Graph(0)) == "?");
  CHECK(encode_graph6(Graph(1)) == "@");
  CHECK(encode_graph6(Graph(2, {{0, 1}})) == "A_");
  CHECK(encode_graph6(cycle(5)) == "Dhc");
  CHECK(decode_graph6("Dhc") == cycle(5));
}

TEST_CASE("graph6 round trip on every graph up to 6 vertices and a large cycle") {
  for (int n = 0; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n, false)) CHECK(decode_graph6(encode_graph6(g)) == g);
  Graph big = cycle(100);
  CHECK(decode_graph6(encode_graph6(big)) == big);
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(decode_graph6("D"), FormatError);
  CHECK_THROWS_AS(decode_graph6("D\x01\x02"), FormatError);
}

TEST_CASE("edge list parse and format") {
  Graph g = parse_edge_list("# triangle plus pendant\n4\n0 1\n1 2\n0 2\n2 3\n");
  CHECK(g.order() == 4);
  CHECK(g.size() == 4);
  CHECK(parse_edge_list(format_edge_list(g)) == g);
  CHECK_THROWS(parse_edge_list("3\n0 5\n"));
  std::istringstream in("Dhc\n\nA_\n");
  auto gs = read_graphs(in, "g6");
  REQUIRE(gs.size() == 2);
  CHECK(gs[1].size() == 1);
}

TEST_CASE("components and induced subgraphs") {
  Graph g(6, {{0, 1}, {1, 2}, {3, 4}});
  auto cs = components(g);
  REQUIRE(cs.size() == 3);
  CHECK(cs[0] == VertexSet{0, 1, 2});
  CHECK(cs[2] == VertexSet{5});
  InducedSubgraph s = induced_subgraph(g, VertexSet{1, 2, 4});
  CHECK(s.graph.order() == 3);
  CHECK(s.graph.size() == 1);
  CHECK(s.lift(VertexSet{2}) == VertexSet{4});
}

TEST_CASE("connecting path is shortest with lexicographic ties") {
  Graph g = cycle(6);
  auto p = connecting_path(g, VertexSet{0}, VertexSet{3}, VertexSet{1, 2, 4, 5});
  REQUIRE(p);
  CHECK(p->vertices == std::vector<int>{0, 1, 2, 3});
  CHECK(!connecting_path(g, VertexSet{0}, VertexSet{3}, VertexSet{1, 5}));
}

TEST_CASE("line graph and subdivision") {
  LineGraph l = line_graph(cycle(5));
  CHECK(are_isomorphic(l.graph, cycle(5)));
  Graph s = subdivide(Graph(2, {{0, 1}}), 3);
  CHECK(s.order() == 5);
  CHECK(s.size() == 4);
  CHECK(smooth(s).size() == 1);
}

TEST_CASE("canonical code agrees with isomorphism") {
  Graph a(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  Graph b(5, {{4, 2}, {2, 0}, {0, 3}, {3, 1}});
  Graph c(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
  CHECK(canonical_code(a) == canonical_code(b));
  CHECK(canonical_code(a) != canonical_code(c));
  CHECK(are_isomorphic(a, b));
  CHECK(!are_isomorphic(a, c));
  auto f = find_isomorphism(a, b);
  REQUIRE(f);
  for (auto [u, v] : a.edge_list()) CHECK(b.adjacent((*f)[u], (*f)[v]));
}

TEST_CASE("weightings are exact") {
  Weighting u = Weighting::uniform(3);
  CHECK(u.of(VertexSet{0, 1}) == Rational(2, 3));
  CHECK(u.exceeds(VertexSet{0, 1}, Rational(1, 2)));
  CHECK(!u.exceeds(VertexSet{0}, Rational(1, 3)));
  CHECK(parse_rational("6/25") == Rational(6, 25));
  CHECK(format_rational(Rational(3, 5)) == "3/5");
  CHECK_THROWS(Weighting::from_rationals({Rational(1, 2), Rational(1, 3)}));
  Weighting w = weighting_from_json(nlohmann::json{{"0", "1/4"}, {"2", "3/4"}}, 3);
  CHECK(w.at(1) == Rational(0));
  CHECK(w.at(2) == Rational(3, 4));
  CHECK(weighting_from_json(to_json(w), 3) == w);
  CHECK_THROWS(weighting_from_json(nlohmann::json{{"0", "1/4"}}, 3));
}

TEST_CASE("order cap") {
  CHECK_THROWS_AS(Graph(kMaxVertices + 1), ScaleError);
}
