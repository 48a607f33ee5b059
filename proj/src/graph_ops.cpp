#include "clockfree/graph_ops.hpp"

#include <algorithm>
#include <stdexcept>

namespace clockfree {

VertexSet Path::interior() const {
  VertexSet s;
  for (std::size_t i = 1; i + 1 < vertices.size(); ++i) s.insert(vertices[i]);
  return s;
}

VertexSet InducedSubgraph::lift(const VertexSet& child) const {
  VertexSet out;
  for (int v : child) out.insert(to_parent[v]);
  return out;
}

VertexSet InducedSubgraph::restrict(const VertexSet& parent) const {
  VertexSet out;
  for (int v : parent)
    if (v < static_cast<int>(to_child.size()) && to_child[v] >= 0) out.insert(to_child[v]);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& S) {
  if (!S.empty() && S.back() >= g.order()) throw std::out_of_range("induced_subgraph: vertex out of range");
  InducedSubgraph out;
  out.to_parent = S.to_vector();
  out.to_child.assign(g.order(), -1);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) out.to_child[out.to_parent[i]] = static_cast<int>(i);
  GraphBuilder b(static_cast<int>(out.to_parent.size()));
  for (std::size_t i = 0; i < out.to_parent.size(); ++i)
    for (int u : g.neighbours(out.to_parent[i]) & S)
      if (out.to_child[u] > static_cast<int>(i)) b.add_edge(static_cast<int>(i), out.to_child[u]);
  out.graph = b.build();
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    for (int v : out.to_parent) labels.push_back(g.label(v));
    out.graph.set_labels(std::move(labels));
  }
  return out;
}

VertexSet component_of(const Graph& g, const VertexSet& within, int v) {
  VertexSet comp = VertexSet::single(v);
  VertexSet frontier = comp;
  while (!frontier.empty()) {
    VertexSet next;
    for (int u : frontier) next |= g.neighbours(u);
    next &= within;
    next -= comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (!left.empty()) {
    VertexSet c = component_of(g, within, left.front());
    out.push_back(c);
    left -= c;
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

bool is_connected(const Graph& g, const VertexSet& within) {
  if (within.empty()) return true;
  return component_of(g, within, within.front()) == within;
}

std::optional<Path> connecting_path(const Graph& g, const VertexSet& from, const VertexSet& to,
                                    const VertexSet& interior) {
  if (from.empty() || to.empty()) return std::nullopt;
  if (VertexSet both = from & to; !both.empty()) return Path{{both.front()}};
  // dist[v]: edges from v to `to`, moving only through interior vertices.
  std::vector<int> dist(g.order(), -1);
  std::vector<int> layer;
  for (int v : to) {
    dist[v] = 0;
    layer.push_back(v);
  }
  int best = -1;
  for (int d = 0; !layer.empty() && best < 0; ++d) {
    std::vector<int> next;
    for (int v : layer)
      for (int u : g.neighbours(v)) {
        if (dist[u] >= 0) continue;
        if (from.contains(u)) best = d + 1;
        if (!interior.contains(u)) continue;
        dist[u] = d + 1;
        next.push_back(u);
      }
    layer = std::move(next);
  }
  if (best < 0) return std::nullopt;
  // Smallest start with a neighbour at distance best-1 on the right side.
  auto ok_step = [&](int u, int want) {
    if (want == 0) return to.contains(u);
    return interior.contains(u) && dist[u] == want;
  };
  Path p;
  for (int s : from) {
    bool good = false;
    for (int u : g.neighbours(s))
      if (ok_step(u, best - 1)) {
        good = true;
        break;
      }
    if (good) {
      p.vertices.push_back(s);
      break;
    }
  }
  for (int want = best - 1; want >= 0; --want) {
    int cur = p.vertices.back();
    for (int u : g.neighbours(cur))
      if (ok_step(u, want) && std::find(p.vertices.begin(), p.vertices.end(), u) == p.vertices.end()) {
        p.vertices.push_back(u);
        break;
      }
  }
  return p;
}

Graph smooth(const Graph& g) {
  GraphBuilder b(g);
  std::vector<bool> gone(g.order(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    Graph cur = b.build();
    for (int v = 0; v < cur.order(); ++v) {
      if (gone[v] || cur.degree(v) != 2) continue;
      int x = cur.neighbours(v).front();
      int y = cur.neighbours(v).next(x);
      if (cur.adjacent(x, y)) continue;
      b.remove_edge(v, x);
      b.remove_edge(v, y);
      b.add_edge(x, y);
      gone[v] = true;
      changed = true;
      break;
    }
  }
  VertexSet keep;
  for (int v = 0; v < g.order(); ++v)
    if (!gone[v]) keep.insert(v);
  return induced_subgraph(b.build(), keep).graph;
}

LineGraph line_graph(const Graph& g) {
  LineGraph out;
  out.edge_of = g.edge_list();
  int m = static_cast<int>(out.edge_of.size());
  GraphBuilder b(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto [a, c] = out.edge_of[i];
      auto [d, e] = out.edge_of[j];
      if (a == d || a == e || c == d || c == e) b.add_edge(i, j);
    }
  out.graph = b.build();
  return out;
}

Graph subdivide(const Graph& g, const std::map<Edge, int>& per_edge) {
  for (auto& [e, count] : per_edge) {
    if (e.first < 0 || e.second >= g.order() || e.first >= e.second || !g.adjacent(e.first, e.second))
      throw std::invalid_argument("subdivide: unknown edge (" + std::to_string(e.first) + "," +
                                  std::to_string(e.second) + ")");
    if (count < 0) throw std::invalid_argument("subdivide: negative count");
  }
  GraphBuilder b(g.order());
  for (auto e : g.edge_list()) {
    auto it = per_edge.find(e);
    int k = it == per_edge.end() ? 0 : it->second;
    int prev = e.first;
    for (int i = 0; i < k; ++i) {
      int x = b.add_vertex();
      b.add_edge(prev, x);
      prev = x;
    }
    b.add_edge(prev, e.second);
  }
  return b.build();
}

Graph subdivide(const Graph& g, int uniform) {
  std::map<Edge, int> m;
  for (auto e : g.edge_list()) m[e] = uniform;
  return subdivide(g, m);
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return b.build();
}

}  // namespace clockfree
