#include <algorithm>
#include <stdexcept>

#include "clockfree/patterns.hpp"

namespace clockfree {

namespace {

bool dominates_all(const Graph& g, const VertexSet& H, const std::array<int, 3>& x) {
  for (int xi : x)
    if (!g.neighbours(xi).intersects(H)) return false;
  return true;
}

bool connects(const Graph& g, const VertexSet& H, const std::array<int, 3>& x) {
  return !H.empty() && is_connected(g, H) && dominates_all(g, H, x);
}

// Vertices of H in path order from `from`, if G[H] is a path ending at from.
std::optional<std::vector<int>> path_order(const Graph& g, const VertexSet& H, int from) {
  std::vector<int> order{from};
  VertexSet seen = VertexSet::single(from);
  while (static_cast<int>(order.size()) < H.size()) {
    VertexSet next = (g.neighbours(order.back()) & H) - seen;
    if (next.size() != 1) return std::nullopt;
    order.push_back(next.front());
    seen.insert(next.front());
  }
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = a + 2; b < order.size(); ++b)
      if (g.adjacent(order[a], order[b])) return std::nullopt;
  return order;
}

VertexSet path_vertices(const Path& p) { return p.vertex_set(); }

std::string check_path_or_hole(const Graph& g, const MinimalConnector& c) {
  const auto& x = c.x;
  int xi = x[c.i], xj = x[c.j], xk = x[c.k];
  const auto& P = c.path.vertices;
  if (P.size() < 3 || P.front() != xi || P.back() != xj) return "path must run xi..xj through H";
  VertexSet inner = c.path.interior();
  if (inner != c.connector) return "V(H) must be the interior of P";
  bool xixj = g.adjacent(xi, xj);
  if (xixj != c.hole) return "hole flag disagrees with xi-xj adjacency";
  if (c.hole && P.size() < 4) return "P with edge xi-xj is a triangle, not a hole";
  for (std::size_t a = 0; a < P.size(); ++a)
    for (std::size_t b = a + 2; b < P.size(); ++b) {
      bool ends = a == 0 && b + 1 == P.size();
      if (g.adjacent(P[a], P[b]) && !ends) return "P has a chord";
    }
  VertexSet nk = g.neighbours(xk) & c.connector;
  if (c.adjacent_pair) {
    if (nk.size() != 2) return "xk must have exactly two neighbours in H";
    if (!g.adjacent(nk.front(), nk.next(nk.front()))) return "xk's two neighbours must be adjacent";
  } else {
    bool found = false;
    for (int a : nk)
      for (int b : nk)
        if (a < b && !g.adjacent(a, b)) found = true;
    if (!found) return "xk needs two non-adjacent neighbours in H";
  }
  return "";
}

// For hub and triangle outcomes: V(H) = union of path vertices minus the x's,
// and the only edges between different paths are the allowed pairs.
std::string check_paths(const Graph& g, const MinimalConnector& c, bool hub) {
  VertexSet xs{c.x[0], c.x[1], c.x[2]};
  VertexSet uni;
  std::array<VertexSet, 3> part;
  for (int m = 0; m < 3; ++m) {
    const Path& p = c.paths[m];
    int start = hub ? c.hub : c.triangle[m];
    if (p.vertices.size() < 2 || p.front() != start || p.back() != c.x[m]) return "path has wrong ends";
    for (std::size_t a = 0; a < p.vertices.size(); ++a)
      for (std::size_t b = a + 2; b < p.vertices.size(); ++b)
        if (g.adjacent(p.vertices[a], p.vertices[b])) return "path has a chord";
    part[m] = path_vertices(p);
    if (hub) part[m].erase(c.hub);
    uni |= path_vertices(p);
  }
  if (uni - xs != c.connector) return "paths do not cover exactly H";
  for (int m = 0; m < 3; ++m)
    for (int n = m + 1; n < 3; ++n) {
      if (part[m].intersects(part[n])) return "paths overlap";
      for (int a : part[m])
        for (int b : part[n]) {
          if (!g.adjacent(a, b)) continue;
          bool allowed = (a == c.x[m] && b == c.x[n]) || (!hub && a == c.triangle[m] && b == c.triangle[n]);
          if (!allowed) return "forbidden edge between paths";
        }
    }
  if (!hub) {
    for (int m = 0; m < 3; ++m)
      for (int n = m + 1; n < 3; ++n)
        if (!g.adjacent(c.triangle[m], c.triangle[n])) return "triangle is not a triangle";
  }
  return "";
}

}  // namespace

std::string check_connector(const Graph& g, const MinimalConnector& c) {
  if (c.connector.intersects(VertexSet{c.x[0], c.x[1], c.x[2]})) return "H meets {x1,x2,x3}";
  if (!connects(g, c.connector, c.x)) return "H is not a connected dominating set";
  for (int v : c.connector)
    if (connects(g, c.connector.without(v), c.x)) return "H is not minimal";
  switch (c.outcome) {
    case MinimalConnector::Outcome::path_or_hole: return check_path_or_hole(g, c);
    case MinimalConnector::Outcome::hub: return check_paths(g, c, true);
    case MinimalConnector::Outcome::triangle: return check_paths(g, c, false);
  }
  return "bad outcome";
}

MinimalConnector minimal_connector(const Graph& g, int x1, int x2, int x3) {
  return minimal_connector(g, x1, x2, x3, g.vertices());
}

MinimalConnector minimal_connector(const Graph& g, int x1, int x2, int x3, const VertexSet& region) {
  std::array<int, 3> x{x1, x2, x3};
  if (x1 == x2 || x1 == x3 || x2 == x3) throw std::invalid_argument("minimal_connector: x1, x2, x3 must be distinct");
  VertexSet R = region - VertexSet{x1, x2, x3};
  VertexSet H;
  for (const VertexSet& comp : components(g, R))
    if (dominates_all(g, comp, x)) {
      H = comp;
      break;
    }
  if (H.empty()) throw std::invalid_argument("minimal_connector: no connected set meets all three neighbourhoods");
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v : H)
      if (connects(g, H.without(v), x)) {
        H.erase(v);
        changed = true;
        break;
      }
  }

  MinimalConnector c;
  c.connector = H;
  c.x = x;

  // (i): H is a path between the unique neighbours of xi and xj.
  const int pairs[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
  for (auto& pr : pairs) {
    int i = pr[0], j = pr[1], k = pr[2];
    VertexSet ni = g.neighbours(x[i]) & H, nj = g.neighbours(x[j]) & H;
    if (ni.size() != 1 || nj.size() != 1) continue;
    auto order = path_order(g, H, ni.front());
    if (!order || order->back() != nj.front()) continue;
    MinimalConnector cand = c;
    cand.outcome = MinimalConnector::Outcome::path_or_hole;
    cand.i = i;
    cand.j = j;
    cand.k = k;
    cand.path.vertices = {x[i]};
    cand.path.vertices.insert(cand.path.vertices.end(), order->begin(), order->end());
    cand.path.vertices.push_back(x[j]);
    cand.hole = g.adjacent(x[i], x[j]);
    VertexSet nk = g.neighbours(x[k]) & H;
    cand.xk_neighbours = nk.to_vector();
    cand.adjacent_pair = nk.size() == 2 && g.adjacent(nk.front(), nk.next(nk.front()));
    if (check_connector(g, cand).empty()) return cand;
  }

  // (ii): a hub with three paths.
  for (int a : H) {
    MinimalConnector cand = c;
    cand.outcome = MinimalConnector::Outcome::hub;
    cand.hub = a;
    bool ok = true;
    for (int m = 0; m < 3 && ok; ++m) {
      auto p = connecting_path(g, VertexSet::single(a), VertexSet::single(x[m]), H.without(a));
      if (!p) ok = false;
      else cand.paths[m] = *p;
    }
    if (ok && check_connector(g, cand).empty()) return cand;
  }

  // (iii): a triangle with three paths.
  std::vector<int> hv = H.to_vector();
  for (int a : hv)
    for (int b : hv)
      for (int d : hv) {
        if (a == b || a == d || b == d) continue;
        if (!g.adjacent(a, b) || !g.adjacent(a, d) || !g.adjacent(b, d)) continue;
        MinimalConnector cand = c;
        cand.outcome = MinimalConnector::Outcome::triangle;
        cand.triangle = {a, b, d};
        bool ok = true;
        for (int m = 0; m < 3 && ok; ++m) {
          VertexSet others = VertexSet{a, b, d}.without(cand.triangle[m]);
          auto p = connecting_path(g, VertexSet::single(cand.triangle[m]), VertexSet::single(x[m]), H - others);
          if (!p) ok = false;
          else cand.paths[m] = *p;
        }
        if (ok && check_connector(g, cand).empty()) return cand;
      }
  throw std::logic_error("minimal_connector: minimal H matches no outcome");
}

}  // namespace clockfree
