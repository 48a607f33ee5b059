#include "clockfree/obstructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "clockfree/cliques.hpp"
#include "clockfree/errors.hpp"
#include "clockfree/graph_ops.hpp"
#include "clockfree/isomorphism.hpp"

namespace clockfree {

std::string obstruction_name(ObstructionKind k) {
  switch (k) {
    case ObstructionKind::complete: return "complete";
    case ObstructionKind::complete_bipartite: return "complete-bipartite";
    case ObstructionKind::wall: return "wall";
    case ObstructionKind::line_of_wall: return "line-of-wall";
    case ObstructionKind::pohoata_davies: return "pohoata-davies";
    case ObstructionKind::prism: return "prism";
    case ObstructionKind::pyramid: return "pyramid";
    case ObstructionKind::theta: return "theta";
  }
  return "?";
}

ObstructionKind parse_obstruction(const std::string& name) {
  for (auto k : {ObstructionKind::complete, ObstructionKind::complete_bipartite, ObstructionKind::wall,
                 ObstructionKind::line_of_wall, ObstructionKind::pohoata_davies, ObstructionKind::prism,
                 ObstructionKind::pyramid, ObstructionKind::theta})
    if (obstruction_name(k) == name) return k;
  throw std::invalid_argument("unknown obstruction kind '" + name + "'");
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

Graph complete_bipartite(int a, int c) {
  if (a < 1 || c < 1) throw std::invalid_argument("complete bipartite graph needs both sides >= 1");
  GraphBuilder b(a + c);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < c; ++v) b.add_edge(u, a + v);
  return b.build();
}

Graph wall(int t) {
  if (t < 1) throw std::invalid_argument("wall needs t >= 1");
  if (t == 1) return Graph(2, {{0, 1}});
  int cols = 2 * t;
  auto id = [&](int r, int c) { return r * cols + c; };
  GraphBuilder b(t * cols);
  for (int r = 0; r < t; ++r)
    for (int c = 0; c + 1 < cols; ++c) b.add_edge(id(r, c), id(r, c + 1));
  for (int r = 0; r + 1 < t; ++r)
    for (int c = 0; c < cols; ++c)
      if ((c + r) % 2 == 0) b.add_edge(id(r, c), id(r + 1, c));
  Graph grid = b.build();
  VertexSet keep = grid.vertices();
  for (int v = 0; v < grid.order(); ++v)
    if (grid.degree(v) <= 1) keep.erase(v);
  return induced_subgraph(grid, keep).graph;
}

Graph subdivided_wall(int t, int subdivisions) {
  if (subdivisions < 0) throw std::invalid_argument("subdivision count must be >= 0");
  return subdivide(wall(t), subdivisions);
}

Graph line_of_wall(int t, int subdivisions) { return line_graph(subdivided_wall(t, subdivisions)).graph; }

Graph pohoata_davies(int h) {
  if (h < 1) throw std::invalid_argument("pohoata-davies needs h >= 1");
  if (h > 6) throw ScaleError("pohoata-davies is capped at h = 6");
  int tree = (1 << (h + 1)) - 1;
  GraphBuilder b(tree);
  // tree edges subdivided once; subdivision vertices follow the tree, by child
  for (int v = 1; v < tree; ++v) {
    int s = b.add_vertex();
    b.add_edge((v - 1) / 2, s);
    b.add_edge(s, v);
  }
  for (int v = (1 << h) - 1; v + 1 < tree; ++v) b.add_edge(v, v + 1);
  return b.build();
}

namespace {

// Appends a path of `len` edges from s to t (len >= 1).
void add_path(GraphBuilder& b, int s, int t, int len) {
  int prev = s;
  for (int i = 1; i < len; ++i) {
    int v = b.add_vertex();
    b.add_edge(prev, v);
    prev = v;
  }
  b.add_edge(prev, t);
}

}  // namespace

Graph theta_graph(const std::array<int, 3>& l) {
  for (int x : l)
    if (x < 2) throw std::invalid_argument("theta paths need length >= 2");
  GraphBuilder b(2);
  for (int x : l) add_path(b, 0, 1, x);
  return b.build();
}

Graph pyramid_graph(const std::array<int, 3>& l) {
  int unit = 0;
  for (int x : l) {
    if (x < 1) throw std::invalid_argument("pyramid paths need length >= 1");
    unit += x == 1;
  }
  if (unit > 1) throw std::invalid_argument("pyramid allows at most one path of length 1");
  GraphBuilder b(4);
  b.add_edge(1, 2);
  b.add_edge(1, 3);
  b.add_edge(2, 3);
  for (int i = 0; i < 3; ++i) add_path(b, 0, i + 1, l[i]);
  return b.build();
}

Graph prism_graph(const std::array<int, 3>& l) {
  for (int x : l)
    if (x < 1) throw std::invalid_argument("prism paths need length >= 1");
  GraphBuilder b(6);
  for (int base : {0, 3}) {
    b.add_edge(base, base + 1);
    b.add_edge(base, base + 2);
    b.add_edge(base + 1, base + 2);
  }
  for (int i = 0; i < 3; ++i) add_path(b, i, i + 3, l[i]);
  return b.build();
}

Graph generate_obstruction(ObstructionKind kind, const ObstructionParams& p) {
  if (p.t < 1) throw std::invalid_argument("t must be >= 1");
  if (p.subdivisions < 0) throw std::invalid_argument("subdivisions must be >= 0");
  switch (kind) {
    case ObstructionKind::complete: return complete_graph(p.t + 1);
    case ObstructionKind::complete_bipartite: return complete_bipartite(p.t, p.t);
    case ObstructionKind::wall: return subdivided_wall(p.t, p.subdivisions);
    case ObstructionKind::line_of_wall: return line_of_wall(p.t, p.subdivisions);
    case ObstructionKind::pohoata_davies: return pohoata_davies(p.h);
    case ObstructionKind::prism: return prism_graph(p.lengths);
    case ObstructionKind::pyramid: return pyramid_graph(p.lengths);
    case ObstructionKind::theta: return theta_graph(p.lengths);
  }
  throw std::invalid_argument("unknown obstruction kind");
}

// ---- subdivisions ----

namespace {

// A graph seen as branch vertices (degree != 2) joined by chains of degree-2
// vertices, plus components that are plain cycles.
struct ChainForm {
  std::vector<int> branch;                  // branch vertices, ascending
  std::vector<int> index;                   // vertex -> position in branch, or -1
  // chains[{i, j}] (i <= j, branch positions): each chain's interior, oriented from i
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> chains;
  std::vector<std::vector<int>> cycles;     // cycle components in order
};

ChainForm chain_form(const Graph& g) {
  ChainForm f;
  f.index.assign(g.order(), -1);
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) {
      f.index[v] = static_cast<int>(f.branch.size());
      f.branch.push_back(v);
    }
  VertexSet used;
  for (int bv : f.branch)
    for (int first : g.neighbours(bv)) {
      std::vector<int> interior;
      int prev = bv, cur = first;
      while (f.index[cur] < 0) {
        interior.push_back(cur);
        int next = -1;
        for (int x : g.neighbours(cur))
          if (x != prev) next = x;
        prev = cur;
        cur = next;
      }
      int i = f.index[bv], j = f.index[cur];
      // each chain is walked from both ends; keep one walk
      if (i > j) continue;
      if (i == j && interior.front() > interior.back()) continue;
      for (int x : interior) used.insert(x);
      f.chains[{i, j}].push_back(interior);
    }
  for (int v = 0; v < g.order(); ++v) {
    if (f.index[v] >= 0 || used.contains(v)) continue;
    std::vector<int> cyc{v};
    used.insert(v);
    int prev = v, cur = g.neighbours(v).front();
    while (cur != v) {
      cyc.push_back(cur);
      used.insert(cur);
      int next = -1;
      for (int x : g.neighbours(cur))
        if (x != prev) next = x;
      prev = cur;
      cur = next;
    }
    f.cycles.push_back(cyc);
  }
  return f;
}

std::vector<int> sorted_lengths(const std::vector<std::vector<int>>& chains) {
  std::vector<int> out;
  for (auto& c : chains) out.push_back(static_cast<int>(c.size()));
  std::sort(out.begin(), out.end());
  return out;
}

// Each base chain fits a distinct H chain at least as long.
bool lengths_fit(std::vector<int> base, std::vector<int> h) {
  if (base.size() != h.size()) return false;
  std::sort(base.begin(), base.end());
  std::sort(h.begin(), h.end());
  for (std::size_t i = 0; i < base.size(); ++i)
    if (h[i] < base[i]) return false;
  return true;
}

}  // namespace

std::optional<SubdivisionMatch> is_subdivision_of(const Graph& H, const Graph& base) {
  if (H.order() > kSubdivisionCap) throw ScaleError("subdivision test is capped at 40 vertices");
  if (H.order() < base.order() || H.size() - H.order() != base.size() - base.order()) return std::nullopt;
  Graph sh = smooth(H), sb = smooth(base);
  if (sh.order() != sb.order() || sh.size() != sb.size()) return std::nullopt;
  if (sh.order() <= kIsomorphismCap && !are_isomorphic(sh, sb)) return std::nullopt;

  ChainForm fh = chain_form(H), fb = chain_form(base);
  if (fh.branch.size() != fb.branch.size() || fh.cycles.size() != fb.cycles.size()) return std::nullopt;
  {
    std::vector<int> lb, lh;
    for (auto& c : fb.cycles) lb.push_back(static_cast<int>(c.size()));
    for (auto& c : fh.cycles) lh.push_back(static_cast<int>(c.size()));
    if (!lengths_fit(lb, lh)) return std::nullopt;
  }
  int k = static_cast<int>(fb.branch.size());
  std::vector<int> map(k, -1);  // base branch position -> H branch position
  std::vector<bool> taken(k, false);
  auto key = [](int i, int j) { return i <= j ? std::pair{i, j} : std::pair{j, i}; };
  auto chains_of = [](const ChainForm& f, std::pair<int, int> kk) {
    auto it = f.chains.find(kk);
    return it == f.chains.end() ? std::vector<std::vector<int>>{} : it->second;
  };
  std::function<bool(int)> assign = [&](int i) -> bool {
    if (i == k) return true;
    int bv = fb.branch[i];
    for (int c = 0; c < k; ++c) {
      if (taken[c] || H.degree(fh.branch[c]) != base.degree(bv)) continue;
      map[i] = c;
      bool ok = true;
      for (int j = 0; j <= i && ok; ++j)
        ok = lengths_fit(sorted_lengths(chains_of(fb, key(j, i))), sorted_lengths(chains_of(fh, key(map[j], c))));
      if (ok) {
        taken[c] = true;
        if (assign(i + 1)) return true;
        taken[c] = false;
      }
    }
    map[i] = -1;
    return false;
  };
  if (!assign(0)) return std::nullopt;

  SubdivisionMatch m;
  m.branch.assign(base.order(), -1);
  for (int i = 0; i < k; ++i) m.branch[fb.branch[i]] = fh.branch[map[i]];
  for (auto& [kk, bchains] : fb.chains) {
    int hi = map[kk.first], hj = map[kk.second];
    auto hchains = chains_of(fh, key(hi, hj));
    bool flip = hi > hj;
    std::vector<std::size_t> border(bchains.size()), horder(hchains.size());
    for (std::size_t x = 0; x < border.size(); ++x) border[x] = horder[x] = x;
    std::sort(border.begin(), border.end(), [&](auto a, auto b) { return bchains[a].size() < bchains[b].size(); });
    std::sort(horder.begin(), horder.end(), [&](auto a, auto b) { return hchains[a].size() < hchains[b].size(); });
    for (std::size_t x = 0; x < border.size(); ++x) {
      std::vector<int> hc = hchains[horder[x]];
      if (flip) std::reverse(hc.begin(), hc.end());
      const auto& bc = bchains[border[x]];
      for (std::size_t y = 0; y < bc.size(); ++y) m.branch[bc[y]] = hc[y];
    }
  }
  for (std::size_t c = 0; c < fb.cycles.size(); ++c) {
    // cycles of equal count were length-checked; pair them by sorted length
    std::vector<std::size_t> bo(fb.cycles.size()), ho(fh.cycles.size());
    for (std::size_t x = 0; x < bo.size(); ++x) bo[x] = ho[x] = x;
    std::sort(bo.begin(), bo.end(), [&](auto a, auto b) { return fb.cycles[a].size() < fb.cycles[b].size(); });
    std::sort(ho.begin(), ho.end(), [&](auto a, auto b) { return fh.cycles[a].size() < fh.cycles[b].size(); });
    const auto& bc = fb.cycles[bo[c]];
    const auto& hc = fh.cycles[ho[c]];
    for (std::size_t y = 0; y < bc.size(); ++y) m.branch[bc[y]] = hc[y];
  }
  return m;
}

// ---- line graph roots ----

std::optional<Graph> recover_root_graph(const Graph& H) {
  if (H.order() > kRootCap) throw ScaleError("root recovery is capped at 40 vertices");
  int n = H.order();
  std::vector<Edge> edges = H.edge_list();
  std::vector<int> count(n, 0);
  std::vector<VertexSet> chosen, best;
  bool found = false;
  std::vector<VertexSet> covered(n);  // covered[u]: neighbours v with uv already covered

  std::function<void()> search = [&]() {
    if (found && chosen.size() >= best.size()) return;
    // first uncovered edge
    int u = -1, v = -1;
    for (auto [a, b] : edges)
      if (!covered[a].contains(b)) {
        u = a;
        v = b;
        break;
      }
    if (u < 0) {
      best = chosen;
      found = true;
      return;
    }
    if (count[u] >= 2 || count[v] >= 2) return;
    // candidates extending {u, v} by vertices joined to the clique by uncovered edges
    VertexSet pool = (H.neighbours(u) & H.neighbours(v)) - covered[u] - covered[v];
    std::vector<int> cand;
    for (int x : pool)
      if (count[x] < 2) cand.push_back(x);
    std::vector<VertexSet> options;
    std::function<void(std::size_t, VertexSet)> grow = [&](std::size_t i, VertexSet K) {
      if (i == cand.size()) {
        options.push_back(K);
        return;
      }
      int x = cand[i];
      bool ok = true;
      for (int y : K)
        if (!H.adjacent(x, y) || covered[x].contains(y)) ok = false;
      if (ok) grow(i + 1, K.with(x));
      grow(i + 1, K);
    };
    grow(0, VertexSet{u, v});
    // larger cliques first: they lead to fewer cliques overall
    std::stable_sort(options.begin(), options.end(), [](auto& a, auto& b) { return a.size() > b.size(); });
    for (const VertexSet& K : options) {
      for (int x : K) {
        ++count[x];
        covered[x] |= K.without(x);
      }
      chosen.push_back(K);
      search();
      chosen.pop_back();
      for (int x : K) {
        --count[x];
        covered[x] -= K.without(x);
      }
    }
  };
  search();
  if (!found) return std::nullopt;

  // root: one vertex per clique, plus a pendant end for vertices in one clique
  GraphBuilder b(static_cast<int>(best.size()));
  std::vector<std::vector<int>> member(n);
  for (std::size_t c = 0; c < best.size(); ++c)
    for (int x : best[c]) member[x].push_back(static_cast<int>(c));
  for (int x = 0; x < n; ++x) {
    while (member[x].size() < 2) member[x].push_back(b.add_vertex());
    b.add_edge(member[x][0], member[x][1]);
  }
  Graph root = b.build();
  if (n <= kIsomorphismCap && !are_isomorphic(line_graph(root).graph, H)) return std::nullopt;
  return root;
}

// ---- cleanness ----

namespace {

// Every connected induced subgraph (vertex set) whose induced degrees stay
// at most max_degree, each once. Visitor returns true to stop.
bool for_each_connected_set(const Graph& g, int max_degree, const std::function<bool(const VertexSet&)>& visit) {
  std::function<bool(int, const VertexSet&, VertexSet)> rec = [&](int root, const VertexSet& S, VertexSet ext) {
    if (visit(S)) return true;
    while (!ext.empty()) {
      int w = ext.front();
      ext.erase(w);
      VertexSet S2 = S.with(w);
      bool ok = (g.neighbours(w) & S).size() <= max_degree;
      for (int x : g.neighbours(w) & S)
        if ((g.neighbours(x) & S2).size() > max_degree) ok = false;
      if (!ok) continue;
      VertexSet excl = g.neighbours(w) - S - g.neighbours(S) - VertexSet::range(root + 1);
      if (rec(root, S2, ext | excl)) return true;
    }
    return false;
  };
  for (int v = 0; v < g.order(); ++v)
    if (rec(v, VertexSet::single(v), g.neighbours(v) - VertexSet::range(v + 1))) return true;
  return false;
}

std::optional<VertexSet> find_biclique(const Graph& g, int t) {
  std::optional<VertexSet> out;
  std::function<bool(VertexSet, VertexSet, int)> rec = [&](VertexSet A, VertexSet common, int next) {
    if (A.size() == t) {
      if (auto B = stable_set_of_size(g, common, t)) {
        out = A | *B;
        return true;
      }
      return false;
    }
    for (int v = next; v < g.order(); ++v) {
      if (g.neighbours(v).intersects(A)) continue;
      VertexSet c = A.empty() ? g.neighbours(v) : (common & g.neighbours(v));
      if (c.size() < t) continue;
      if (rec(A.with(v), c, v + 1)) return true;
    }
    return false;
  };
  rec(VertexSet{}, VertexSet{}, 0);
  return out;
}

}  // namespace

CleanResult is_t_clean(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  if (g.order() > kCleanCap) throw ScaleError("cleanness test is capped at " + std::to_string(kCleanCap) + " vertices");
  CleanResult r;
  std::optional<VertexSet> K;
  for_each_clique(g, g.vertices(), [&](const VertexSet& c) {
    if (c.size() == t + 1) {
      K = c;
      return true;
    }
    return false;
  });
  if (K) return {false, "complete", *K};
  if (auto B = find_biclique(g, t)) return {false, "complete-bipartite", *B};

  Graph W = wall(t);
  int w3 = 0;
  for (int v = 0; v < W.order(); ++v) w3 += W.degree(v) == 3;
  std::optional<VertexSet> hit;
  for_each_connected_set(g, 3, [&](const VertexSet& S) {
    if (S.size() < W.order()) return false;
    InducedSubgraph sub = induced_subgraph(g, S);
    int d3 = 0;
    for (int v = 0; v < sub.graph.order(); ++v) d3 += sub.graph.degree(v) == 3;
    if (d3 != w3) return false;
    if (is_subdivision_of(sub.graph, W)) {
      hit = S;
      return true;
    }
    return false;
  });
  if (hit) return {false, "wall", *hit};

  for_each_connected_set(g, 4, [&](const VertexSet& S) {
    if (S.size() < W.size()) return false;
    InducedSubgraph sub = induced_subgraph(g, S);
    auto root = recover_root_graph(sub.graph);
    if (!root) return false;
    if (root->order() <= kSubdivisionCap && is_subdivision_of(*root, W)) {
      hit = S;
      return true;
    }
    return false;
  });
  if (hit) return {false, "line-of-wall", *hit};
  return r;
}

}  // namespace clockfree
