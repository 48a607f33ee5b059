#include <algorithm>
#include <stdexcept>

#include "clockfree/cliques.hpp"
#include "clockfree/cutsets.hpp"
#include "clockfree/errors.hpp"
#include "clockfree/patterns.hpp"
#include "clockfree/serialize.hpp"
#include "path_search.hpp"

namespace clockfree {

namespace {

using Paths = std::array<std::vector<int>, 3>;
using PathsVisitor = std::function<bool(const Paths&)>;

// Three induced paths s[i] -> t[i] whose interiors avoid `specials` and
// forbid[i], are pairwise disjoint and pairwise anticomplete. With
// all == false the last path is a shortest one, enough for existence.
struct ThreePaths {
  const Graph& g;
  std::array<int, 3> s, t;
  std::array<VertexSet, 3> forbid;
  VertexSet specials;
  bool all;
  const PathsVisitor& visit;
  Paths cur;

  bool step(int i, const VertexSet& used) {
    if (i == 3) return visit(cur);
    VertexSet region = g.vertices() - specials - forbid[i] - used;
    auto next_used = [&](const std::vector<int>& p) {
      VertexSet inner;
      for (std::size_t k = 1; k + 1 < p.size(); ++k) inner.insert(p[k]);
      return used | inner | g.neighbours(inner);
    };
    if (g.adjacent(s[i], t[i])) {
      cur[i] = {s[i], t[i]};
      return step(i + 1, used);
    }
    if (i == 2 && !all) {
      auto p = connecting_path(g, VertexSet::single(s[i]), VertexSet::single(t[i]), region);
      if (!p) return false;
      cur[i] = p->vertices;
      return step(i + 1, next_used(cur[i]));
    }
    return detail::for_each_induced_path(g, s[i], t[i], region, [&](const std::vector<int>& p) {
      cur[i] = p;
      return step(i + 1, next_used(p));
    });
  }

  bool run() { return step(0, VertexSet{}); }
};

PatternWitness theta_witness(int a, int b, const Paths& p) {
  PatternWitness w;
  w.kind = "theta";
  w.roles["ends"] = {a, b};
  w.paths.assign(p.begin(), p.end());
  return w;
}

PatternWitness pyramid_witness(int a, const std::array<int, 3>& base, const Paths& p) {
  PatternWitness w;
  int unit = 0;
  for (auto& q : p) unit += q.size() == 2;
  w.kind = unit == 1 ? "short-pyramid" : "pyramid";
  w.roles["apex"] = {a};
  w.roles["base"] = {base[0], base[1], base[2]};
  w.paths.assign(p.begin(), p.end());
  return w;
}

PatternWitness prism_witness(const std::array<int, 3>& A, const std::array<int, 3>& B, const Paths& p) {
  PatternWitness w;
  w.kind = "prism";
  w.roles["triangle_a"] = {A[0], A[1], A[2]};
  w.roles["triangle_b"] = {B[0], B[1], B[2]};
  w.paths.assign(p.begin(), p.end());
  return w;
}

std::vector<std::array<int, 3>> triangles(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < g.order(); ++a)
    for (int b : g.neighbours(a) - VertexSet::range(a + 1))
      for (int c : (g.neighbours(a) & g.neighbours(b)) - VertexSet::range(b + 1)) out.push_back({a, b, c});
  return out;
}

bool search_thetas(const Graph& g, bool all, const std::function<bool(const PatternWitness&)>& emit) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b) {
      if (g.adjacent(a, b)) continue;
      PathsVisitor v = [&](const Paths& p) { return emit(theta_witness(a, b, p)); };
      ThreePaths tp{g, {a, a, a}, {b, b, b}, {}, VertexSet{a, b}, all, v, {}};
      if (tp.run()) return true;
    }
  return false;
}

bool search_pyramids(const Graph& g, bool all, bool short_only, const std::function<bool(const PatternWitness&)>& emit) {
  for (auto T : triangles(g)) {
    VertexSet tset{T[0], T[1], T[2]};
    for (int a = 0; a < g.order(); ++a) {
      if (tset.contains(a)) continue;
      int touch = (g.neighbours(a) & tset).size();
      if (touch > 1 || (short_only && touch != 1)) continue;
      std::array<int, 3> base = T;
      std::array<VertexSet, 3> forbid;
      for (int i = 0; i < 3; ++i)
        forbid[i] = g.neighbours(base[(i + 1) % 3]) | g.neighbours(base[(i + 2) % 3]);
      PathsVisitor v = [&](const Paths& p) { return emit(pyramid_witness(a, base, p)); };
      ThreePaths tp{g, {a, a, a}, base, forbid, tset.with(a), all, v, {}};
      if (tp.run()) return true;
    }
  }
  return false;
}

bool search_prisms(const Graph& g, bool all, const std::function<bool(const PatternWitness&)>& emit) {
  auto tris = triangles(g);
  for (std::size_t x = 0; x < tris.size(); ++x)
    for (std::size_t y = x + 1; y < tris.size(); ++y) {
      std::array<int, 3> A = tris[x];
      std::array<int, 3> B = tris[y];
      VertexSet as{A[0], A[1], A[2]}, bs{B[0], B[1], B[2]};
      if (as.intersects(bs)) continue;
      std::sort(B.begin(), B.end());
      do {
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i)
          for (int j = 0; j < 3 && ok; ++j)
            if (i != j && g.adjacent(A[i], B[j])) ok = false;
        if (!ok) continue;
        std::array<VertexSet, 3> forbid;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            if (i != j) forbid[i] |= g.closed_neighbours(A[j]) | g.closed_neighbours(B[j]);
        std::array<int, 3> Bc = B;
        PathsVisitor v = [&](const Paths& p) { return emit(prism_witness(A, Bc, p)); };
        ThreePaths tp{g, A, B, forbid, as | bs, all, v, {}};
        if (tp.run()) return true;
      } while (std::next_permutation(B.begin(), B.end()));
    }
  return false;
}

}  // namespace

namespace detail {

std::optional<PatternWitness> find_three_path(const Graph& g, Pattern which) {
  std::optional<PatternWitness> out;
  auto take = [&](const PatternWitness& w) {
    out = w;
    return true;
  };
  bool any = which == Pattern::three_path_config;
  if ((any || which == Pattern::theta) && search_thetas(g, false, take)) return out;
  if ((any || which == Pattern::pyramid) && search_pyramids(g, false, false, take)) {
    if (out->kind == "short-pyramid" && which == Pattern::pyramid) out->kind = "pyramid";
    if (out->kind == "short-pyramid" && any) out->kind = "pyramid";
    return out;
  }
  if (which == Pattern::short_pyramid && search_pyramids(g, false, true, take)) return out;
  if ((any || which == Pattern::prism) && search_prisms(g, false, take)) return out;
  return std::nullopt;
}

}  // namespace detail

void for_each_three_path_config(const Graph& g, const std::function<bool(const PatternWitness&)>& visit) {
  auto emit = [&](const PatternWitness& w) {
    PatternWitness copy = w;
    if (copy.kind == "short-pyramid") copy.kind = "pyramid";
    return visit(copy);
  };
  if (search_thetas(g, true, emit)) return;
  if (search_pyramids(g, true, false, emit)) return;
  search_prisms(g, true, emit);
}

namespace {

std::vector<int> reversed(std::vector<int> p) {
  std::reverse(p.begin(), p.end());
  return p;
}

std::vector<int> prefixed(int v, const std::vector<int>& p) {
  std::vector<int> out{v};
  out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<int> suffixed(std::vector<int> p, int v) {
  p.push_back(v);
  return p;
}

}  // namespace

PatternWitness three_path_config_through(const Graph& g, int v, int x1, int x2, int x3, ThreePathOptions opts) {
  std::array<int, 3> x{x1, x2, x3};
  for (int xi : x)
    if (xi < 0 || xi >= g.order() || !g.adjacent(v, xi))
      throw PreconditionError("x" + std::to_string(xi) + " is not a neighbour of v");
  if (x1 == x2 || x1 == x3 || x2 == x3) throw PreconditionError("x1, x2, x3 must be distinct");
  if (g.is_clique(VertexSet{x1, x2, x3})) throw PreconditionError("{x1, x2, x3} is a clique");
  if (opts.check_hypotheses) {
    if (auto c = find_pattern(g, Pattern::clock)) throw PreconditionError("graph contains a clock", to_json(*c));
    if (auto d = find_pattern(g, Pattern::diamond)) throw PreconditionError("graph contains a diamond", to_json(*d));
    if (auto s = find_star_cutset(g)) throw PreconditionError("graph has a star cutset", to_json(*s));
  }
  VertexSet D = g.vertices() - g.closed_neighbours(v);
  MinimalConnector c;
  try {
    c = minimal_connector(g, x1, x2, x3, D.with(x1).with(x2).with(x3));
  } catch (const std::invalid_argument& e) {
    throw PreconditionError(std::string("no connector outside N[v]: ") + e.what());
  }

  int edges = g.adjacent(x1, x2) + g.adjacent(x1, x3) + g.adjacent(x2, x3);
  auto diamond_violation = [&]() {
    PatternWitness d;
    d.kind = "diamond";
    // two edges among the x's: the middle one and v form the spine
    int mid = -1;
    for (int m = 0; m < 3; ++m) {
      int o1 = x[(m + 1) % 3], o2 = x[(m + 2) % 3];
      if (g.adjacent(x[m], o1) && g.adjacent(x[m], o2)) mid = m;
    }
    d.roles["spine"] = {v, x[mid]};
    d.roles["tips"] = {x[(mid + 1) % 3], x[(mid + 2) % 3]};
    return PreconditionError("two edges among x1, x2, x3 give a diamond", to_json(d));
  };

  PatternWitness w;
  switch (c.outcome) {
    case MinimalConnector::Outcome::path_or_hole: {
      int xi = x[c.i], xj = x[c.j], xk = x[c.k];
      const auto& P = c.path.vertices;
      if (!c.adjacent_pair) {
        PatternWitness clock;
        clock.kind = "clock";
        clock.roles["hole"] = c.hole ? P : suffixed(P, v);
        clock.roles["center"] = {xk};
        throw PreconditionError("x" + std::to_string(xk) + " is the center of a clock", to_json(clock));
      }
      // xk's neighbours p, q are consecutive on P, p nearer to xi
      std::size_t at = 0;
      while (!g.adjacent(xk, P[at]) || P[at] == xi) ++at;
      std::vector<int> to_p(P.begin(), P.begin() + static_cast<long>(at) + 1);
      std::vector<int> q_to_xj(P.begin() + static_cast<long>(at) + 1, P.end());
      int p = P[at], q = P[at + 1];
      if (!c.hole) {
        w = pyramid_witness(v, {xk, p, q}, Paths{std::vector<int>{v, xk}, prefixed(v, to_p), prefixed(v, reversed(q_to_xj))});
      } else {
        w = prism_witness({v, xi, xj}, {xk, p, q}, Paths{std::vector<int>{v, xk}, to_p, reversed(q_to_xj)});
      }
      break;
    }
    case MinimalConnector::Outcome::hub: {
      int a = c.hub;
      if (edges == 0) {
        Paths p;
        for (int m = 0; m < 3; ++m) p[m] = prefixed(v, reversed(c.paths[m].vertices));
        w = theta_witness(v, a, p);
      } else if (edges == 1) {
        int k = 0;
        while (g.adjacent(x[k], x[(k + 1) % 3]) || g.adjacent(x[k], x[(k + 2) % 3])) ++k;
        int i = (k + 1) % 3, j = (k + 2) % 3;
        w = pyramid_witness(a, {v, x[i], x[j]},
                            Paths{suffixed(c.paths[k].vertices, v), c.paths[i].vertices, c.paths[j].vertices});
      } else {
        throw diamond_violation();
      }
      break;
    }
    case MinimalConnector::Outcome::triangle: {
      const auto& T = c.triangle;
      if (edges == 0) {
        Paths p;
        for (int m = 0; m < 3; ++m) p[m] = prefixed(v, reversed(c.paths[m].vertices));
        w = pyramid_witness(v, T, p);
      } else if (edges == 1) {
        int k = 0;
        while (g.adjacent(x[k], x[(k + 1) % 3]) || g.adjacent(x[k], x[(k + 2) % 3])) ++k;
        int i = (k + 1) % 3, j = (k + 2) % 3;
        w = prism_witness({v, x[i], x[j]}, {T[k], T[i], T[j]},
                          Paths{prefixed(v, reversed(c.paths[k].vertices)), reversed(c.paths[i].vertices),
                                reversed(c.paths[j].vertices)});
      } else {
        throw diamond_violation();
      }
      break;
    }
  }
  std::string why = check_witness(g, w);
  if (!why.empty()) throw PreconditionError("assembled configuration is not induced (" + why + ")", to_json(w));
  VertexSet vs = w.vertex_set();
  for (int u : {v, x1, x2, x3})
    if (!vs.contains(u)) throw std::logic_error("three-path configuration misses a required vertex");
  return w;
}

}  // namespace clockfree
