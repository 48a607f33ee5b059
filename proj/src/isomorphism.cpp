#include "clockfree/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>

#include "clockfree/errors.hpp"
#include "clockfree/graph_ops.hpp"

namespace clockfree {

namespace {

// Colour refinement run on both graphs with a shared signature table, so
// colours are comparable across them.
bool joint_refinement(const Graph& g, const Graph& h, std::vector<int>& cg, std::vector<int>& ch) {
  int n = g.order();
  cg.assign(n, 0);
  ch.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    cg[v] = g.degree(v);
    ch[v] = h.degree(v);
  }
  int classes = -1;
  while (true) {
    std::map<std::vector<int>, int> table;
    auto sig = [](const Graph& x, const std::vector<int>& c, int v) {
      std::vector<int> s;
      for (int u : x.neighbours(v)) s.push_back(c[u]);
      std::sort(s.begin(), s.end());
      s.insert(s.begin(), c[v]);
      return s;
    };
    std::vector<std::vector<int>> sg(n), sh(n);
    for (int v = 0; v < n; ++v) {
      sg[v] = sig(g, cg, v);
      sh[v] = sig(h, ch, v);
      table.emplace(sg[v], 0);
      table.emplace(sh[v], 0);
    }
    int id = 0;
    for (auto& [k, val] : table) val = id++;
    std::vector<int> histogram_g(id, 0), histogram_h(id, 0);
    for (int v = 0; v < n; ++v) {
      cg[v] = table[sg[v]];
      ch[v] = table[sh[v]];
      ++histogram_g[cg[v]];
      ++histogram_h[ch[v]];
    }
    if (histogram_g != histogram_h) return false;
    if (id == classes) return true;
    classes = id;
  }
}

struct Matcher {
  const Graph& g;
  const Graph& h;
  std::vector<int> cg, ch, order, map, used;

  bool run(std::size_t i) {
    if (i == order.size()) return true;
    int v = order[i];
    for (int x = 0; x < h.order(); ++x) {
      if (used[x] || ch[x] != cg[v]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        int u = order[j];
        ok = g.adjacent(u, v) == h.adjacent(map[u], x);
      }
      if (!ok) continue;
      map[v] = x;
      used[x] = 1;
      if (run(i + 1)) return true;
      used[x] = 0;
    }
    map[v] = -1;
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() > kIsomorphismCap || h.order() > kIsomorphismCap)
    throw ScaleError("isomorphism test capped at " + std::to_string(kIsomorphismCap) + " vertices");
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  Matcher m{g, h, {}, {}, {}, {}, {}};
  if (!joint_refinement(g, h, m.cg, m.ch)) return std::nullopt;
  // Breadth-first order so each new vertex is constrained by mapped neighbours.
  std::vector<int> seen(g.order(), 0);
  for (int s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<int> queue{s};
    seen[s] = 1;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      m.order.push_back(queue[k]);
      for (int u : g.neighbours(queue[k]))
        if (!seen[u]) {
          seen[u] = 1;
          queue.push_back(u);
        }
    }
  }
  m.map.assign(g.order(), -1);
  m.used.assign(g.order(), 0);
  if (!m.run(0)) return std::nullopt;
  return m.map;
}

namespace {

using Row = std::uint16_t;

struct Canon {
  int n;
  std::array<Row, kCanonicalCap> adj{};
  std::uint64_t best = 0;
  bool have = false;

  // cells: ordered partition, each cell a bitmask.
  void refine(std::vector<Row>& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<Row> out;
      for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        Row cell = cells[ci];
        if (std::popcount(cell) == 1) {
          out.push_back(cell);
          continue;
        }
        // signature: neighbour counts in every cell, in cell order
        std::vector<std::pair<std::vector<int>, int>> sig;
        for (int v = 0; v < n; ++v) {
          if (!((cell >> v) & 1)) continue;
          std::vector<int> s;
          s.reserve(cells.size());
          for (Row c : cells) s.push_back(std::popcount(static_cast<Row>(adj[v] & c)));
          sig.emplace_back(std::move(s), v);
        }
        std::sort(sig.begin(), sig.end());
        Row cur = 0;
        for (std::size_t k = 0; k < sig.size(); ++k) {
          if (k > 0 && sig[k].first != sig[k - 1].first) {
            out.push_back(cur);
            cur = 0;
            changed = true;
          }
          cur |= static_cast<Row>(1u << sig[k].second);
        }
        out.push_back(cur);
      }
      cells = std::move(out);
    }
  }

  void search(std::vector<Row> cells) {
    refine(cells);
    std::size_t pick = cells.size();
    int pick_size = 99;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      int s = std::popcount(cells[i]);
      if (s > 1 && s < pick_size) {
        pick = i;
        pick_size = s;
      }
    }
    if (pick == cells.size()) {
      std::array<int, kCanonicalCap> at{};
      for (std::size_t i = 0; i < cells.size(); ++i) {
        int v = std::countr_zero(cells[i]);
        at[i] = v;
      }
      std::uint64_t code = 0;
      int k = 0;
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
          if ((adj[at[i]] >> at[j]) & 1) code |= std::uint64_t{1} << k;
      if (!have || code > best) {
        best = code;
        have = true;
      }
      return;
    }
    Row cell = cells[pick];
    Row tried = 0;
    for (int v = 0; v < n; ++v) {
      if (!((cell >> v) & 1)) continue;
      // swapping twins is an automorphism fixing the partition: one branch suffices
      bool twin = false;
      for (int u = 0; u < v && !twin; ++u)
        if (((tried >> u) & 1) && static_cast<Row>(adj[u] & ~(1u << v)) == static_cast<Row>(adj[v] & ~(1u << u)))
          twin = true;
      if (twin) continue;
      tried |= static_cast<Row>(1u << v);
      std::vector<Row> next;
      next.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i == pick) {
          next.push_back(static_cast<Row>(1u << v));
          next.push_back(static_cast<Row>(cell & ~(1u << v)));
        } else {
          next.push_back(cells[i]);
        }
      }
      search(std::move(next));
    }
  }
};

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  int n = g.order();
  if (n > kCanonicalCap) throw ScaleError("canonical form capped at " + std::to_string(kCanonicalCap) + " vertices");
  if (n == 0) return 0;
  Canon c{n};
  for (int v = 0; v < n; ++v) c.adj[v] = static_cast<Row>(g.neighbours(v).low_word());
  std::vector<Row> cells;
  // initial cells by degree
  for (int d = 0; d < n; ++d) {
    Row cell = 0;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) == d) cell |= static_cast<Row>(1u << v);
    if (cell) cells.push_back(cell);
  }
  c.search(std::move(cells));
  return c.best;
}

Graph graph_from_code(int n, std::uint64_t code) {
  GraphBuilder b(n);
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if ((code >> k) & 1) b.add_edge(i, j);
  return b.build();
}

}  // namespace clockfree
