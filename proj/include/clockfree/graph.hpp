#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "clockfree/vertex_set.hpp"

namespace clockfree {

using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Simple undirected graph on vertices 0..n-1 with bitset adjacency.
// Treat as immutable once built; use GraphBuilder to assemble one.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);
  Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::vector<Edge>(edges)) {}

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return edges_; }
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  const VertexSet& neighbours(int v) const { return adj_[v]; }
  VertexSet closed_neighbours(int v) const { return adj_[v].with(v); }
  // Vertices outside X with a neighbour in X.
  VertexSet neighbours(const VertexSet& X) const;
  int degree(int v) const { return adj_[v].size(); }
  VertexSet vertices() const { return VertexSet::range(order()); }
  // Edges (u, v) with u < v, sorted.
  std::vector<Edge> edge_list() const;

  bool is_clique(const VertexSet& X) const;
  bool is_stable(const VertexSet& X) const;
  // X and Y disjoint with no edges between them.
  bool anticomplete(const VertexSet& X, const VertexSet& Y) const;
  int edges_within(const VertexSet& X) const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }
  std::string label(int v) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  friend class GraphBuilder;
  std::vector<VertexSet> adj_;
  int edges_ = 0;
  std::vector<std::string> labels_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  explicit GraphBuilder(const Graph& g) : g_(g) {}
  int add_vertex();
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool adjacent(int u, int v) const { return g_.adjacent(u, v); }
  int order() const { return g_.order(); }
  Graph build() const { return g_; }

 private:
  Graph g_;
};

}  // namespace clockfree
