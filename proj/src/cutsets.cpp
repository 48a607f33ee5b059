#include "clockfree/cutsets.hpp"

#include <algorithm>
#include <stdexcept>

#include "clockfree/cliques.hpp"
#include "clockfree/errors.hpp"
#include "clockfree/graph_ops.hpp"

namespace clockfree {

std::string flavour_name(CutsetFlavour f) {
  switch (f) {
    case CutsetFlavour::star: return "star";
    case CutsetFlavour::clique: return "clique";
    case CutsetFlavour::two_clique: return "two-clique";
  }
  return "?";
}

bool certifies_split(const Graph& g, const Cutset& c) {
  if (c.side1.empty() || c.side2.empty()) return false;
  VertexSet rest = g.vertices() - c.X;
  return component_of(g, rest, c.side1.front()) == c.side1 && component_of(g, rest, c.side2.front()) == c.side2 &&
         c.side1 != c.side2;
}

bool separates(const Graph& g, const VertexSet& X, const VertexSet& Y, const VertexSet& Z) {
  if (X.intersects(Y) || X.intersects(Z) || Y.intersects(Z)) return false;
  VertexSet rest = g.vertices() - X;
  VertexSet reach = Y;
  VertexSet frontier = Y;
  while (!frontier.empty()) {
    VertexSet next = g.neighbours(frontier) & rest;
    next -= reach;
    reach |= next;
    frontier = next;
  }
  return !reach.intersects(Z);
}

namespace {

// Two components of G\X, the first two by smallest vertex; nullopt if connected.
std::optional<Cutset> split_by(const Graph& g, const VertexSet& X, CutsetFlavour f, int center) {
  auto comps = components(g, g.vertices() - X);
  if (comps.size() < 2) return std::nullopt;
  return Cutset{f, X, center, comps[0], comps[1]};
}

bool disconnects(const Graph& g, const VertexSet& X) { return components(g, g.vertices() - X).size() >= 2; }

}  // namespace

std::optional<Cutset> find_star_cutset(const Graph& g) {
  int n = g.order();
  for (int x = 0; x < n; ++x) {
    VertexSet closed = g.closed_neighbours(x);
    VertexSet outside = g.vertices() - closed;
    for (int p = 0; p < n; ++p) {
      if (p == x) continue;
      VertexSet reach = component_of(g, outside.with(p), p);
      // vertices q reachable from p through V \ N[x]
      VertexSet hit = reach | g.neighbours(reach);
      for (int q = p + 1; q < n; ++q) {
        if (q == x || g.adjacent(p, q) || hit.contains(q)) continue;
        VertexSet X = closed - VertexSet{p, q};
        for (int y : VertexSet(X)) {
          if (y == x) continue;
          if (disconnects(g, X.without(y))) X.erase(y);
        }
        auto c = split_by(g, X, CutsetFlavour::star, x);
        if (!c) throw std::logic_error("star cutset test accepted a non-separating set");
        return c;
      }
    }
  }
  return std::nullopt;
}

std::optional<Cutset> find_star_cutset_exhaustive(const Graph& g) {
  if (g.order() > kStarOracleCap) throw ScaleError("exhaustive star cutset search is capped at 12 vertices");
  for (int x = 0; x < g.order(); ++x) {
    std::vector<int> nb = g.neighbours(x).to_vector();
    for (std::uint32_t mask = 0; mask < (1u << nb.size()); ++mask) {
      VertexSet X = VertexSet::single(x);
      for (std::size_t i = 0; i < nb.size(); ++i)
        if (mask >> i & 1) X.insert(nb[i]);
      if (auto c = split_by(g, X, CutsetFlavour::star, x)) return c;
    }
  }
  return std::nullopt;
}

namespace {

std::vector<VertexSet> cliques_by_size(const Graph& g) {
  std::vector<VertexSet> all;
  for_each_clique(g, g.vertices(), [&](const VertexSet& K) {
    all.push_back(K);
    return false;
  });
  std::stable_sort(all.begin(), all.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return all;
}

}  // namespace

std::optional<Cutset> find_clique_cutset(const Graph& g) {
  if (auto c = split_by(g, VertexSet{}, CutsetFlavour::clique, -1)) return c;
  for (const VertexSet& K : cliques_by_size(g))
    if (auto c = split_by(g, K, CutsetFlavour::clique, -1)) return c;
  return std::nullopt;
}

namespace {

AtomTree atoms_rec(const Graph& g, const VertexSet& S) {
  AtomTree node;
  node.vertices = S;
  InducedSubgraph sub = induced_subgraph(g, S);
  auto cut = find_clique_cutset(sub.graph);
  if (!cut) return node;
  VertexSet K = sub.lift(cut->X);
  node.cut = K;
  for (const VertexSet& comp : components(g, S - K)) node.children.push_back(atoms_rec(g, comp | K));
  return node;
}

void collect_atoms(const AtomTree& t, std::vector<VertexSet>& out) {
  if (t.children.empty()) out.push_back(t.vertices);
  for (auto& c : t.children) collect_atoms(c, out);
}

}  // namespace

AtomTree clique_atoms(const Graph& g) { return atoms_rec(g, g.vertices()); }

std::vector<VertexSet> atoms_of(const AtomTree& t) {
  std::vector<VertexSet> out;
  collect_atoms(t, out);
  return out;
}

}  // namespace clockfree
