// Central bag, marker paths, the extended bag and separator lifting.

#include <algorithm>

#include "clockfree/patterns.hpp"
#include "clockfree/separations.hpp"
#include "clockfree/serialize.hpp"

namespace clockfree {

ExtendedBag central_bag(const Graph& g, const Weighting& w, const std::vector<CliquePair>& core) {
  ExtendedBag bag;
  bag.beta = g.vertices();
  for (const CliquePair& X : core) {
    CoreRecord r;
    r.X = X;
    r.sep = canonical_separation(g, w, X.X());
    bag.beta &= r.sep.B | r.sep.C;
    bag.core.push_back(std::move(r));
  }
  bag.deleted = components(g, g.vertices() - bag.beta);
  for (const VertexSet& D : bag.deleted) {
    int owner = -1;
    for (std::size_t i = 0; i < bag.core.size(); ++i)
      if (D.is_subset_of(bag.core[i].sep.A)) {
        owner = static_cast<int>(i);
        break;
      }
    bag.assignment.push_back(owner);
    if (owner < 0) {
      bag.assignment_ok = false;
      continue;
    }
    bag.core[owner].components.push_back(D);
    bag.core[owner].D |= D;
  }
  return bag;
}

Path marker_path(const Graph& g, const CliquePair& X, const VertexSet& D) {
  VertexSet N = g.neighbours(D);
  if (g.is_clique(N))
    throw PreconditionError("N(D) is a clique: G has a clique cutset", json{{"cutset", to_json(N)}, {"D", to_json(D)}});
  std::optional<Path> best;
  for (int p : N)
    for (int q : N) {
      if (q <= p || g.adjacent(p, q)) continue;
      auto P = connecting_path(g, VertexSet::single(p), VertexSet::single(q), D);
      if (!P) continue;
      if (!best || P->vertices.size() < best->vertices.size() ||
          (P->vertices.size() == best->vertices.size() && P->vertices < best->vertices))
        best = P;
    }
  if (!best) throw PreconditionError("no path through D joins two non-adjacent vertices of N(D)", json{{"D", to_json(D)}});
  const Path& P = *best;
  json info{{"path", P.vertices}, {"X", to_json(X.X())}};
  if (P.vertices.size() < 3) throw PreconditionError("marker path has fewer than three vertices", info);
  if (!X.X().contains(P.front()) || !X.X().contains(P.back()))
    throw PreconditionError("marker path ends are not in X", info);
  VertexSet PX = P.vertex_set() | X.X();
  for (int v : P.interior())
    if ((g.neighbours(v) & PX).size() != 2)
      throw PreconditionError("marker path interior vertex has degree other than 2 in G[P ∪ X]", info);
  return P;
}

ExtendedBag extend_bag(const Graph& g, const Weighting& w, ExtendedBag bag) {
  if (!bag.assignment_ok)
    throw PreconditionError("a component of G minus the central bag lies in no A-side");
  int n = g.order();
  std::vector<Rational> ws(n, Rational(0));
  for (int v : bag.beta) ws[v] = w.at(v);
  bag.beta_star = bag.beta;
  for (CoreRecord& r : bag.core) {
    if (r.D.empty()) continue;
    const VertexSet* pick = &r.components.front();
    for (const VertexSet& C : r.components)
      if (C.front() < pick->front()) pick = &C;
    r.marker = marker_path(g, r.X, *pick);
    VertexSet inner = r.marker.interior();
    r.anchor = inner.front();
    ws[r.anchor] = w.of(r.D);
    bag.beta_star |= inner;
  }
  VertexSet added = bag.beta_star - bag.beta;
  for (int v : added) {
    VertexSet nb = g.neighbours(v) & bag.beta_star;
    if (nb.size() != 2)
      throw PreconditionError("marker vertex does not have degree 2 in the extended bag", json{{"vertex", v}});
    if (g.adjacent(nb.front(), nb.back()))
      throw PreconditionError("marker vertex lies in a triangle of the extended bag", json{{"vertex", v}});
  }
  Rational total(0);
  for (const Rational& r : ws) total += r;
  if (total != Rational(1))
    throw PreconditionError("w* does not sum to 1", json{{"total", format_rational(total)}});
  bag.w_star = Weighting::from_rationals(ws);
  bag.extended = true;
  return bag;
}

namespace {

bool simplicial_without(const Graph& g, int y, int x) { return g.is_clique(g.neighbours(y).without(x)); }

}  // namespace

LiftResult lift_separator(const Graph& g, const Weighting& w, const ExtendedBag& bag, const VertexSet& S, int t) {
  if (!bag.extended) throw std::invalid_argument("lift_separator needs an extended bag");
  if (!S.is_subset_of(bag.beta_star)) throw std::invalid_argument("S is not inside the extended bag");
  const VertexSet& star = bag.beta_star;
  InducedSubgraph sub = induced_subgraph(g, star);
  auto deg_star = [&](int v) { return (g.neighbours(v) & star).size(); };
  LiftResult out;
  out.Y = S;
  for (int v : S) {
    LiftRecord rec;
    rec.v = v;
    const CoreRecord* owner = nullptr;
    for (const CoreRecord& r : bag.core)
      if (!r.marker.vertices.empty() && r.marker.interior().contains(v)) owner = &r;
    VertexSet Nv = g.neighbours(v) & star;
    if (owner) {
      rec.rule = "marker";
      rec.Y = owner->X.X();
    } else if (!is_claw_center(sub.graph, sub.to_child[v])) {
      rec.rule = "neighbourhood";
      rec.Y = Nv;
    } else {
      std::string problem;
      VertexSet K;
      for (const VertexSet& comp : components(g, Nv)) {
        if (comp.size() <= 1) continue;
        if (!K.empty()) problem = "N(v) in the extended bag has two components of size more than one";
        K = comp;
      }
      if (problem.empty() && !g.is_clique(K)) problem = "the large component of N(v) is not a clique";
      VertexSet rest = Nv - K;
      int x1 = -1;
      for (int y : rest)
        if (deg_star(y) > 2) {
          if (x1 >= 0) problem = "two neighbours outside K have degree more than 2";
          x1 = y;
        }
      if (x1 < 0) x1 = Nv.front();
      VertexSet Z1 = K.with(x1);
      int x2 = -1;
      for (int y : (g.neighbours(v) & bag.beta) - Z1)
        if (!simplicial_without(g, y, v)) {
          if (x2 >= 0) problem = "two neighbours outside Z1 are not simplicial in G - v";
          x2 = y;
        }
      if (x2 < 0) x2 = x1;
      if (problem.empty()) {
        rec.rule = "z2";
        rec.Y = Z1.with(x2);
      } else {
        rec.rule = "z2-fallback";
        rec.Y = Nv;
        out.fallback = true;
        out.violations.push_back("vertex " + std::to_string(v) + ": " + problem);
      }
    }
    out.Y |= rec.Y;
    out.records.push_back(std::move(rec));
  }
  out.verified = is_balanced_separator(g, w, out.Y, kHalf);
  out.within_bound = out.Y.size() <= S.size() * (2 * t + 1);
  return out;
}

}  // namespace clockfree
