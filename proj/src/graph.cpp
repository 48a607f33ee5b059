#include "clockfree/graph.hpp"

#include <stdexcept>

#include "clockfree/errors.hpp"

namespace clockfree {

namespace {

void check_order(int n) {
  if (n < 0) throw std::invalid_argument("negative graph order");
  if (n > kMaxVertices)
    throw ScaleError("graph order " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxVertices));
}

}  // namespace

Graph::Graph(int n) {
  check_order(n);
  adj_.resize(n);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  *this = b.build();
}

VertexSet Graph::neighbours(const VertexSet& X) const {
  VertexSet out;
  for (int v : X) out |= adj_[v];
  return out - X;
}

std::vector<Edge> Graph::edge_list() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (int u = 0; u < order(); ++u)
    for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) out.emplace_back(u, v);
  return out;
}

bool Graph::is_clique(const VertexSet& X) const {
  for (int v : X)
    if (!(X.without(v)).is_subset_of(adj_[v])) return false;
  return true;
}

bool Graph::is_stable(const VertexSet& X) const {
  for (int v : X)
    if (adj_[v].intersects(X)) return false;
  return true;
}

bool Graph::anticomplete(const VertexSet& X, const VertexSet& Y) const {
  if (X.intersects(Y)) return false;
  for (int v : X)
    if (adj_[v].intersects(Y)) return false;
  return true;
}

int Graph::edges_within(const VertexSet& X) const {
  int twice = 0;
  for (int v : X) twice += (adj_[v] & X).size();
  return twice / 2;
}

std::string Graph::label(int v) const {
  if (v >= 0 && v < static_cast<int>(labels_.size())) return labels_[v];
  return std::to_string(v);
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}

int GraphBuilder::add_vertex() {
  if (g_.order() >= kMaxVertices) throw ScaleError("graph order exceeds cap " + std::to_string(kMaxVertices));
  g_.adj_.emplace_back();
  return g_.order() - 1;
}

void GraphBuilder::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= g_.order() || v >= g_.order()) throw std::out_of_range("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop " + std::to_string(u));
  if (g_.adj_[u].contains(v)) return;
  g_.adj_[u].insert(v);
  g_.adj_[v].insert(u);
  ++g_.edges_;
}

void GraphBuilder::remove_edge(int u, int v) {
  if (!g_.adj_[u].contains(v)) return;
  g_.adj_[u].erase(v);
  g_.adj_[v].erase(u);
  --g_.edges_;
}

}  // namespace clockfree
