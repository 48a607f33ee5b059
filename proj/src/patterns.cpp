#include "clockfree/patterns.hpp"

#include <algorithm>
#include <stdexcept>

#include "clockfree/cliques.hpp"
#include "clockfree/errors.hpp"
#include "path_search.hpp"

namespace clockfree {

using detail::for_each_induced_path;

std::string pattern_name(Pattern p) {
  switch (p) {
    case Pattern::hole: return "hole";
    case Pattern::wheel: return "wheel";
    case Pattern::clock: return "clock";
    case Pattern::t_clock: return "t-clock";
    case Pattern::diamond: return "diamond";
    case Pattern::paw: return "paw";
    case Pattern::seagull: return "seagull";
    case Pattern::claw: return "claw";
    case Pattern::prism: return "prism";
    case Pattern::pyramid: return "pyramid";
    case Pattern::short_pyramid: return "short-pyramid";
    case Pattern::theta: return "theta";
    case Pattern::three_path_config: return "three-path-config";
  }
  return "?";
}

Pattern parse_pattern(const std::string& name) {
  for (int i = 0; i <= static_cast<int>(Pattern::three_path_config); ++i)
    if (pattern_name(static_cast<Pattern>(i)) == name) return static_cast<Pattern>(i);
  throw std::invalid_argument("unknown pattern '" + name + "'");
}

VertexSet PatternWitness::vertex_set() const {
  VertexSet s;
  for (auto& [name, vs] : roles)
    for (int v : vs) s.insert(v);
  for (auto& p : paths)
    for (int v : p) s.insert(v);
  return s;
}

std::optional<std::vector<int>> claw_triple(const Graph& g, int v) {
  if (auto s = stable_set_of_size(g, g.neighbours(v), 3)) return s->to_vector();
  return std::nullopt;
}

bool is_simplicial(const Graph& g, int v) { return g.is_clique(g.neighbours(v)); }

std::optional<int> near_simplicial_witness(const Graph& g, int u) {
  const VertexSet& nb = g.neighbours(u);
  if (nb.empty()) return u;
  for (int v : nb)
    if (g.is_clique(nb.without(v))) return v;
  return std::nullopt;
}

bool is_chordal(const Graph& g) {
  // Maximum cardinality search; the visit order reversed is a perfect
  // elimination order iff the graph is chordal.
  int n = g.order();
  std::vector<int> weight(n, 0);
  VertexSet visited;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!visited.contains(v) && (best < 0 || weight[v] > weight[best])) best = v;
    if (!g.is_clique(g.neighbours(best) & visited)) return false;
    visited.insert(best);
    for (int u : g.neighbours(best))
      if (!visited.contains(u)) ++weight[u];
  }
  return true;
}

void holes_enumerate(const Graph& g, int max_length, const VertexSet& through,
                     const std::function<bool(const std::vector<int>&)>& visit) {
  if (g.order() > kPatternCap) throw ScaleError("hole enumeration capped at " + std::to_string(kPatternCap));
  int n = g.order();
  int last_start = through.empty() ? n - 1 : through.front();
  std::vector<int> path;
  VertexSet on_path;
  bool stop = false;
  std::function<void(int, const VertexSet&)> dfs = [&](int s, const VertexSet& above) {
    int last = path.back();
    // vertices the next vertex must avoid: everything on the path but s and last
    VertexSet inner = on_path.without(s).without(last);
    for (int u : g.neighbours(last) & above) {
      if (stop) return;
      if (on_path.contains(u) || g.neighbours(u).intersects(inner)) continue;
      if (g.adjacent(u, s)) {
        if (path.size() + 1 >= 4 && u > path[1]) {
          path.push_back(u);
          if (through.is_subset_of(on_path.with(u)) && visit(path)) stop = true;
          path.pop_back();
        }
        continue;
      }
      if (max_length > 0 && static_cast<int>(path.size()) + 2 > max_length) continue;
      path.push_back(u);
      on_path.insert(u);
      dfs(s, above);
      on_path.erase(u);
      path.pop_back();
    }
  };
  for (int s = 0; s <= last_start && !stop; ++s) {
    VertexSet above = g.vertices() - VertexSet::range(s + 1);
    for (int a : g.neighbours(s) & above) {
      if (stop) break;
      path = {s, a};
      on_path = VertexSet{s, a};
      dfs(s, above);
    }
  }
}

std::optional<std::vector<int>> hole_through(const Graph& g, int x, int y, const VertexSet& allowed) {
  if (g.adjacent(x, y) || x == y) return std::nullopt;
  VertexSet region0 = allowed.without(x).without(y);
  std::optional<std::vector<int>> out;
  for_each_induced_path(g, x, y, region0, [&](const std::vector<int>& p1) {
    VertexSet inner;
    for (std::size_t i = 1; i + 1 < p1.size(); ++i) inner.insert(p1[i]);
    VertexSet region = region0 - inner - g.neighbours(inner);
    auto p2 = connecting_path(g, VertexSet::single(x), VertexSet::single(y), region);
    if (!p2) return false;
    std::vector<int> cycle = p1;
    for (int i = p2->length() - 1; i >= 1; --i) cycle.push_back(p2->vertices[i]);
    out = cycle;
    return true;
  });
  return out;
}

namespace {

PatternWitness make_clock(const std::vector<int>& cycle, int v, const char* kind) {
  PatternWitness w;
  w.kind = kind;
  w.roles["hole"] = cycle;
  w.roles["center"] = {v};
  return w;
}

std::optional<PatternWitness> find_hole(const Graph& g) {
  for (int s = 0; s < g.order(); ++s) {
    VertexSet outside = g.vertices() - g.closed_neighbours(s);
    for (int a : g.neighbours(s))
      for (int b : g.neighbours(s) - VertexSet::range(a + 1)) {
        if (g.adjacent(a, b)) continue;
        auto p = connecting_path(g, VertexSet::single(a), VertexSet::single(b), outside);
        if (!p) continue;
        PatternWitness w;
        w.kind = "hole";
        std::vector<int> cycle{s};
        cycle.insert(cycle.end(), p->vertices.begin(), p->vertices.end());
        w.roles["cycle"] = cycle;
        return w;
      }
  }
  return std::nullopt;
}

std::optional<PatternWitness> find_clock(const Graph& g) {
  if (is_chordal(g)) return std::nullopt;
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet& nb = g.neighbours(v);
    for (int x : nb)
      for (int y : nb - VertexSet::range(x + 1)) {
        if (g.adjacent(x, y)) continue;
        if (auto c = hole_through(g, x, y, g.vertices().without(v))) return make_clock(*c, v, "clock");
      }
  }
  return std::nullopt;
}

std::optional<PatternWitness> find_t_clock(const Graph& g, int t) {
  if (is_chordal(g)) return std::nullopt;
  int need = std::max(t, 2);
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet& nb = g.neighbours(v);
    for (int x : nb)
      for (int y : nb - VertexSet::range(x + 1)) {
        if (g.adjacent(x, y)) continue;
        VertexSet region0 = g.vertices().without(v).without(x).without(y);
        std::optional<PatternWitness> out;
        for_each_induced_path(g, x, y, region0, need, -1, [&](const std::vector<int>& p1) {
          VertexSet inner;
          for (std::size_t i = 1; i + 1 < p1.size(); ++i) inner.insert(p1[i]);
          VertexSet region = region0 - inner - g.neighbours(inner);
          return for_each_induced_path(g, x, y, region, need, -1, [&](const std::vector<int>& p2) {
            std::vector<int> cycle = p1;
            for (int i = static_cast<int>(p2.size()) - 2; i >= 1; --i) cycle.push_back(p2[i]);
            out = make_clock(cycle, v, "t-clock");
            out->roles["pair"] = {x, y};
            return true;
          });
        });
        if (out) return out;
      }
  }
  return std::nullopt;
}

std::optional<PatternWitness> find_wheel(const Graph& g) {
  if (is_chordal(g)) return std::nullopt;
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet& nb = g.neighbours(v);
    if (nb.size() < 3) continue;
    for (int x : nb)
      for (int y : nb - VertexSet::range(x + 1)) {
        if (g.adjacent(x, y)) continue;
        VertexSet region0 = g.vertices().without(v).without(x).without(y);
        std::optional<PatternWitness> out;
        for_each_induced_path(g, x, y, region0, [&](const std::vector<int>& p1) {
          VertexSet inner;
          for (std::size_t i = 1; i + 1 < p1.size(); ++i) inner.insert(p1[i]);
          VertexSet region = region0 - inner - g.neighbours(inner);
          return for_each_induced_path(g, x, y, region, [&](const std::vector<int>& p2) {
            std::vector<int> cycle = p1;
            for (int i = static_cast<int>(p2.size()) - 2; i >= 1; --i) cycle.push_back(p2[i]);
            VertexSet cs(cycle.begin(), cycle.end());
            if ((nb & cs).size() < 3) return false;
            out = make_clock(cycle, v, "wheel");
            return true;
          });
        });
        if (out) return out;
      }
  }
  return std::nullopt;
}

std::optional<PatternWitness> find_diamond(const Graph& g) {
  for (auto [x, y] : g.edge_list()) {
    VertexSet common = g.neighbours(x) & g.neighbours(y);
    for (int a : common)
      for (int b : common - VertexSet::range(a + 1))
        if (!g.adjacent(a, b)) {
          PatternWitness w;
          w.kind = "diamond";
          w.roles["spine"] = {x, y};
          w.roles["tips"] = {a, b};
          return w;
        }
  }
  return std::nullopt;
}

std::optional<PatternWitness> find_paw(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet& nb = g.neighbours(v);
    for (int a : nb)
      for (int a2 : (nb & g.neighbours(a)) - VertexSet::range(a + 1)) {
        VertexSet pend = nb - g.closed_neighbours(a) - g.closed_neighbours(a2);
        if (pend.empty()) continue;
        PatternWitness w;
        w.kind = "paw";
        w.roles["a"] = {a};
        w.roles["a_prime"] = {a2};
        w.roles["v"] = {v};
        w.roles["u"] = {pend.front()};
        return w;
      }
  }
  return std::nullopt;
}

std::optional<PatternWitness> find_seagull(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet& nb = g.neighbours(v);
    for (int a : nb) {
      VertexSet far = nb - g.closed_neighbours(a) - VertexSet::range(a + 1);
      if (far.empty()) continue;
      PatternWitness w;
      w.kind = "seagull";
      w.roles["v"] = {v};
      w.roles["a"] = {a};
      w.roles["u"] = {far.front()};
      return w;
    }
  }
  return std::nullopt;
}

std::optional<PatternWitness> find_claw(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (auto t = claw_triple(g, v)) {
      PatternWitness w;
      w.kind = "claw";
      w.roles["center"] = {v};
      w.roles["leaves"] = *t;
      return w;
    }
  return std::nullopt;
}

}  // namespace

// Declared in three_path.cpp.
namespace detail {
std::optional<PatternWitness> find_three_path(const Graph& g, Pattern which);
}

std::optional<PatternWitness> find_pattern(const Graph& g, PatternKind kind) {
  if (g.order() > kPatternCap)
    throw ScaleError("pattern search capped at " + std::to_string(kPatternCap) + " vertices");
  std::optional<PatternWitness> w;
  switch (kind.pattern) {
    case Pattern::hole: w = find_hole(g); break;
    case Pattern::wheel: w = find_wheel(g); break;
    case Pattern::clock: w = find_clock(g); break;
    case Pattern::t_clock:
      if (kind.t < 1) throw std::invalid_argument("t-clock needs t >= 1");
      w = find_t_clock(g, kind.t);
      break;
    case Pattern::diamond: w = find_diamond(g); break;
    case Pattern::paw: w = find_paw(g); break;
    case Pattern::seagull: w = find_seagull(g); break;
    case Pattern::claw: w = find_claw(g); break;
    case Pattern::prism:
    case Pattern::pyramid:
    case Pattern::short_pyramid:
    case Pattern::theta:
    case Pattern::three_path_config: w = detail::find_three_path(g, kind.pattern); break;
  }
  if (w) {
    std::string why = check_witness(g, *w);
    if (!why.empty()) throw std::logic_error("pattern search produced an invalid " + w->kind + " witness: " + why);
  }
  return w;
}

bool has_clock(const Graph& g) { return find_clock(g).has_value(); }
bool has_diamond(const Graph& g) { return find_diamond(g).has_value(); }

}  // namespace clockfree
