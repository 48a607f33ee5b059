#pragma once

#include <map>
#include <optional>
#include <vector>

#include "clockfree/graph.hpp"

namespace clockfree {

// A path given by its vertex sequence in G.
struct Path {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  int front() const { return vertices.front(); }
  int back() const { return vertices.back(); }
  VertexSet vertex_set() const { return VertexSet(vertices.begin(), vertices.end()); }
  // Vertices other than the two ends.
  VertexSet interior() const;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;  // new id -> id in the parent graph
  std::vector<int> to_child;   // parent id -> new id, or -1

  VertexSet lift(const VertexSet& child) const;
  VertexSet restrict(const VertexSet& parent) const;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& S);

// Connected pieces of G[within], ordered by minimum vertex.
std::vector<VertexSet> components(const Graph& g, const VertexSet& within);
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g, const VertexSet& within);
// The component of G[within] containing v.
VertexSet component_of(const Graph& g, const VertexSet& within, int v);

// Shortest path with one end in `from`, the other in `to` and interior inside
// `interior`; ties go to the lexicographically smallest vertex sequence.
std::optional<Path> connecting_path(const Graph& g, const VertexSet& from, const VertexSet& to,
                                    const VertexSet& interior);

// Suppresses degree-2 vertices with non-adjacent neighbours, lowest id first.
Graph smooth(const Graph& g);

struct LineGraph {
  Graph graph;
  std::vector<Edge> edge_of;  // vertex of L(G) -> edge of G
};
LineGraph line_graph(const Graph& g);

// Replaces each edge by a path with the given number of internal vertices.
// Original vertices keep their ids; new vertices follow in edge order.
Graph subdivide(const Graph& g, const std::map<Edge, int>& per_edge);
Graph subdivide(const Graph& g, int uniform);

Graph complement(const Graph& g);

// Each vertex with at least one neighbour in X, excluding X: same as g.neighbours(X).
inline VertexSet neighbourhood(const Graph& g, const VertexSet& X) { return g.neighbours(X); }

}  // namespace clockfree
