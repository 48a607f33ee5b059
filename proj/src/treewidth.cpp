#include "clockfree/treewidth.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "clockfree/cutsets.hpp"
#include "clockfree/errors.hpp"
#include "clockfree/graph_ops.hpp"
#include "clockfree/separations.hpp"

namespace clockfree {

int TreeDecomposition::width() const {
  int w = -1;
  for (auto& b : bags) w = std::max(w, b.size() - 1);
  return w;
}

namespace {

// Mutable adjacency used by elimination-based routines.
struct Elim {
  std::vector<VertexSet> adj;
  VertexSet alive;

  explicit Elim(const Graph& g) : alive(g.vertices()) {
    for (int v = 0; v < g.order(); ++v) adj.push_back(g.neighbours(v));
  }

  int degree(int v) const { return adj[v].size(); }

  int fill(int v) const {
    int missing = 0;
    std::vector<int> nb = adj[v].to_vector();
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!adj[nb[i]].contains(nb[j])) ++missing;
    return missing;
  }

  // Makes N(v) a clique and deletes v; returns N(v) at that moment.
  VertexSet eliminate(int v) {
    VertexSet nb = adj[v];
    for (int x : nb) {
      adj[x] |= nb;
      adj[x].erase(x);
      adj[x].erase(v);
    }
    adj[v].clear();
    alive.erase(v);
    return nb;
  }

  bool is_clique(const VertexSet& S) const {
    for (int x : S)
      if (!(S.without(x)).is_subset_of(adj[x])) return false;
    return true;
  }
};

}  // namespace

int elimination_width(const Graph& g, const std::vector<int>& order) {
  Elim e(g);
  int w = -1;
  for (int v : order) w = std::max(w, e.eliminate(v).size());
  return w;
}

TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<int>& order) {
  int n = g.order();
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("elimination order must list every vertex");
  TreeDecomposition td;
  if (n == 0) {
    td.bags.push_back(VertexSet{});
    return td;
  }
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  Elim e(g);
  std::vector<int> roots;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    VertexSet nb = e.eliminate(v);
    td.bags.push_back(nb.with(v));
    int parent = -1;
    for (int x : nb)
      if (parent < 0 || pos[x] < parent) parent = pos[x];
    if (parent < 0) roots.push_back(i);
    else td.edges.push_back({i, parent});
  }
  for (std::size_t r = 1; r < roots.size(); ++r) td.edges.push_back({roots[r - 1], roots[r]});
  return td;
}

int min_fill_upper_bound(const Graph& g, std::vector<int>* order) {
  Elim e(g);
  int w = -1;
  std::vector<int> out;
  while (!e.alive.empty()) {
    int best = -1, best_fill = 0;
    for (int v : e.alive) {
      int f = e.fill(v);
      if (best < 0 || f < best_fill || (f == best_fill && e.degree(v) < e.degree(best))) {
        best = v;
        best_fill = f;
      }
    }
    w = std::max(w, e.eliminate(best).size());
    out.push_back(best);
  }
  if (order) *order = out;
  return w;
}

int minor_min_width(const Graph& g) {
  std::vector<VertexSet> adj;
  for (int v = 0; v < g.order(); ++v) adj.push_back(g.neighbours(v));
  VertexSet alive = g.vertices();
  int lb = 0;
  while (alive.size() > 1) {
    int v = -1;
    for (int x : alive)
      if (v < 0 || adj[x].size() < adj[v].size()) v = x;
    lb = std::max(lb, adj[v].size());
    if (adj[v].empty()) {
      alive.erase(v);
      continue;
    }
    // contract v into the neighbour sharing fewest neighbours with it
    int u = -1;
    for (int x : adj[v])
      if (u < 0 || (adj[x] & adj[v]).size() < (adj[u] & adj[v]).size()) u = x;
    for (int x : adj[v]) {
      adj[x].erase(v);
      if (x != u) {
        adj[x].insert(u);
        adj[u].insert(x);
      }
    }
    adj[v].clear();
    alive.erase(v);
  }
  return lb;
}

TreewidthResult exact_treewidth(const Graph& g) {
  int n = g.order();
  TreewidthResult r;
  if (n == 0) {
    r.width = -1;
    r.decomposition = decomposition_from_order(g, {});
    return r;
  }
  Elim e(g);
  int low = minor_min_width(g);
  std::vector<int> order;
  // safe reductions
  bool changed = true;
  while (changed && !e.alive.empty()) {
    changed = false;
    for (int v : e.alive) {
      if (e.is_clique(e.adj[v])) {
        low = std::max(low, e.degree(v));
        order.push_back(v);
        e.eliminate(v);
        changed = true;
        break;
      }
      if (e.degree(v) <= low) {
        bool almost = false;
        for (int u : e.adj[v])
          if (e.is_clique(e.adj[v].without(u))) almost = true;
        if (almost) {
          order.push_back(v);
          e.eliminate(v);
          changed = true;
          break;
        }
      }
    }
  }
  std::vector<int> core = e.alive.to_vector();
  int k = static_cast<int>(core.size());
  if (k > kTreewidthCap) throw ScaleError("exact treewidth is capped at 22 vertices after reductions");
  if (k > 0) {
    std::vector<std::uint32_t> adj(k, 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (e.adj[core[i]].contains(core[j])) adj[i] |= 1u << j;
    // q(S, v): vertices outside S ∪ {v} reachable from v through S
    auto q = [&](std::uint32_t S, int v) {
      std::uint32_t reach = 1u << v, frontier = reach, seen = reach;
      std::uint32_t out = 0;
      while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[__builtin_ctz(f)];
        out |= next & ~S & ~(1u << v);
        next &= S & ~seen;
        seen |= next;
        frontier = next;
      }
      return __builtin_popcount(out);
    };
    std::vector<int> core_order;
    Graph h(k);
    {
      GraphBuilder b(k);
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          if (adj[i] >> j & 1) b.add_edge(i, j);
      h = b.build();
    }
    int ub = min_fill_upper_bound(h, &core_order);
    if (ub > low) {
      std::uint32_t full = k == 32 ? ~0u : (1u << k) - 1;
      std::vector<std::int8_t> tw(std::size_t(full) + 1, 0);
      tw[0] = -1;
      auto cap = static_cast<std::int8_t>(ub);
      for (std::uint32_t S = 1; S <= full; ++S) {
        std::int8_t best = cap;
        for (std::uint32_t rest = S; rest; rest &= rest - 1) {
          int v = __builtin_ctz(rest);
          std::uint32_t T = S & ~(1u << v);
          if (tw[T] >= best) continue;
          int val = std::max<int>(tw[T], q(T, v));
          if (val < best) best = static_cast<std::int8_t>(val);
        }
        tw[S] = best;
      }
      if (tw[full] < ub) {
        std::vector<int> rev;
        std::uint32_t S = full;
        while (S) {
          int pick = -1;
          for (std::uint32_t rest = S; rest; rest &= rest - 1) {
            int v = __builtin_ctz(rest);
            std::uint32_t T = S & ~(1u << v);
            if (std::max<int>(tw[T], q(T, v)) == tw[S]) {
              pick = v;
              break;
            }
          }
          rev.push_back(pick);
          S &= ~(1u << pick);
        }
        core_order.assign(rev.rbegin(), rev.rend());
      }
    }
    for (int i : core_order) order.push_back(core[i]);
  }
  r.order = order;
  r.width = elimination_width(g, order);
  r.decomposition = decomposition_from_order(g, order);
  return r;
}

Validation validate_decomposition(const Graph& g, const TreeDecomposition& td) {
  int m = static_cast<int>(td.bags.size());
  auto fail = [](int axiom, std::string msg) { return Validation{false, axiom, std::move(msg)}; };
  if (m == 0) {
    if (g.order() == 0) return {};
    return fail(0, "decomposition has no nodes");
  }
  if (static_cast<int>(td.edges.size()) != m - 1) return fail(0, "a tree on m nodes has m-1 edges");
  std::vector<std::vector<int>> tadj(m);
  for (auto [a, b] : td.edges) {
    if (a < 0 || b < 0 || a >= m || b >= m || a == b) return fail(0, "bad tree edge");
    tadj[a].push_back(b);
    tadj[b].push_back(a);
  }
  std::vector<bool> seen(m, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    ++count;
    for (int y : tadj[x])
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
  }
  if (count != m) return fail(0, "tree is not connected");
  VertexSet cover;
  for (auto& b : td.bags) cover |= b;
  if (!cover.is_subset_of(g.vertices())) return fail(1, "a bag holds a vertex outside the graph");
  if (cover != g.vertices()) return fail(1, "vertex " + std::to_string((g.vertices() - cover).front()) + " is in no bag");
  for (auto [u, v] : g.edge_list()) {
    bool ok = false;
    for (auto& b : td.bags)
      if (b.contains(u) && b.contains(v)) ok = true;
    if (!ok) return fail(2, "edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag");
  }
  for (int v = 0; v < g.order(); ++v) {
    std::vector<bool> in(m);
    int start = -1, total = 0;
    for (int i = 0; i < m; ++i) {
      in[i] = td.bags[i].contains(v);
      if (in[i]) {
        ++total;
        if (start < 0) start = i;
      }
    }
    std::vector<bool> vis(m, false);
    std::vector<int> st{start};
    vis[start] = true;
    int reached = 0;
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      ++reached;
      for (int y : tadj[x])
        if (in[y] && !vis[y]) {
          vis[y] = true;
          st.push_back(y);
        }
    }
    if (reached != total) return fail(3, "bags holding vertex " + std::to_string(v) + " are not connected");
  }
  return {};
}

namespace {

int split_threshold(int k, const Rational& c) {
  int m = 1;
  while (true) {
    Rational cm = c * Rational(m);
    std::int64_t fl = cm.numerator() / cm.denominator();
    if (fl + k <= m - 1) return m;
    ++m;
  }
}

}  // namespace

int separator_decomposition_bound(int k, const Rational& c) { return split_threshold(k, c) + k - 1; }

TreeDecomposition decomposition_from_separators(const Graph& g, const SeparatorOracle& oracle, int k,
                                                const Rational& c) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  if (c < kHalf || c >= Rational(1)) throw std::invalid_argument("c must lie in [1/2, 1)");
  int threshold = split_threshold(k, c);
  TreeDecomposition td;
  if (g.order() == 0) {
    td.bags.push_back(VertexSet{});
    return td;
  }
  // Returns the node id whose bag is the root of the part covering U with interface Z.
  std::function<int(const VertexSet&, const VertexSet&)> build = [&](const VertexSet& U, const VertexSet& Z) -> int {
    VertexSet bag;
    VertexSet taken;
    if (Z.size() < threshold) {
      int u = U.front();
      bag = Z.with(u);
      taken = VertexSet::single(u);
    } else {
      Weighting w = Weighting::uniform_on(g.order(), Z);
      VertexSet X = oracle(w);
      if (X.size() > k) throw PreconditionError("oracle returned a separator larger than k");
      if (!X.is_subset_of(g.vertices()) || !is_balanced_separator(g, w, X, c))
        throw PreconditionError("oracle returned a set that is not (w, c)-balanced");
      taken = X & U;
      bag = Z | taken;
    }
    int node = static_cast<int>(td.bags.size());
    td.bags.push_back(bag);
    for (const VertexSet& C : components(g, U - taken)) {
      VertexSet Zc = g.neighbours(C) & bag;
      int child = build(C, Zc);
      td.edges.push_back({node, child});
    }
    return node;
  };
  std::vector<int> roots;
  for (const VertexSet& comp : components(g)) roots.push_back(build(comp, VertexSet{}));
  for (std::size_t i = 1; i < roots.size(); ++i) td.edges.push_back({roots[i - 1], roots[i]});
  return td;
}

VertexSet separator_from_decomposition(const Graph& g, const TreeDecomposition& td, const Weighting& w,
                                       const Rational& c) {
  if (c < kHalf || c >= Rational(1)) throw std::invalid_argument("c must lie in [1/2, 1)");
  Validation val = validate_decomposition(g, td);
  if (!val.ok) throw std::invalid_argument("invalid decomposition: " + val.message);
  if (g.order() == 0) return {};
  int m = static_cast<int>(td.bags.size());
  std::vector<std::vector<int>> tadj(m);
  for (auto [a, b] : td.edges) {
    tadj[a].push_back(b);
    tadj[b].push_back(a);
  }
  // vertices in the bags on nb's side of the edge (from, nb)
  auto side = [&](int from, int nb) {
    VertexSet out;
    std::vector<int> st{nb};
    std::vector<bool> vis(m, false);
    vis[from] = vis[nb] = true;
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      out |= td.bags[x];
      for (int y : tadj[x])
        if (!vis[y]) {
          vis[y] = true;
          st.push_back(y);
        }
    }
    return out;
  };
  int cur = 0;
  for (int step = 0; step <= m; ++step) {
    const VertexSet& B = td.bags[cur];
    std::optional<VertexSet> heavy;
    for (const VertexSet& comp : components(g, g.vertices() - B))
      if (w.exceeds(comp, c)) heavy = comp;
    if (!heavy) return B;
    int next = -1;
    for (int nb : tadj[cur])
      if (side(cur, nb).contains(heavy->front())) next = nb;
    if (next < 0) throw std::logic_error("centroid walk lost the heavy component");
    cur = next;
  }
  throw std::logic_error("centroid walk did not terminate");
}

namespace {

TreeDecomposition atoms_td(const Graph& g, const AtomTree& t) {
  TreeDecomposition out;
  if (t.children.empty()) {
    InducedSubgraph sub = induced_subgraph(g, t.vertices);
    TreeDecomposition local = exact_treewidth(sub.graph).decomposition;
    for (auto& b : local.bags) out.bags.push_back(sub.lift(b));
    out.edges = local.edges;
    return out;
  }
  VertexSet K = *t.cut;
  int anchor = -1;
  for (const AtomTree& child : t.children) {
    TreeDecomposition ct = atoms_td(g, child);
    int offset = static_cast<int>(out.bags.size());
    int here = -1;
    for (std::size_t i = 0; i < ct.bags.size(); ++i) {
      out.bags.push_back(ct.bags[i]);
      if (here < 0 && K.is_subset_of(ct.bags[i])) here = offset + static_cast<int>(i);
    }
    for (auto [a, b] : ct.edges) out.edges.push_back({a + offset, b + offset});
    if (here < 0) throw std::logic_error("clique cutset not inside a bag of its piece");
    if (anchor < 0) anchor = here;
    else out.edges.push_back({anchor, here});
  }
  return out;
}

}  // namespace

TreeDecomposition decomposition_from_atoms(const Graph& g) {
  if (g.order() == 0) return decomposition_from_order(g, {});
  return atoms_td(g, clique_atoms(g));
}

int gamma_d(const Graph& g, int d) {
  if (d < 0) throw std::invalid_argument("d must be >= 0");
  VertexSet D;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) >= d) D.insert(v);
  int best = 0;
  for (int v : D) best = std::max(best, (g.neighbours(v) & D).size());
  return best;
}

std::optional<VertexSet> minimum_balanced_separator(const Graph& g, const Weighting& w, const Rational& c, int cap) {
  int n = g.order();
  int limit = cap < 0 ? n : std::min(cap, n);
  for (int s = 0; s <= limit; ++s) {
    std::vector<int> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      VertexSet X(idx.begin(), idx.end());
      if (is_balanced_separator(g, w, X, c)) return X;
      int i = s - 1;
      while (i >= 0 && idx[i] == n - s + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace clockfree
