#include "clockfree/separations.hpp"

#include <algorithm>
#include <map>

#include "clockfree/cliques.hpp"
#include "clockfree/serialize.hpp"

namespace clockfree {

bool is_balanced_separator(const Graph& g, const Weighting& w, const VertexSet& X, const Rational& c) {
  for (const VertexSet& comp : components(g, g.vertices() - X))
    if (w.exceeds(comp, c)) return false;
  return true;
}

std::optional<VertexSet> heavy_component(const Graph& g, const Weighting& w, const VertexSet& X) {
  for (const VertexSet& comp : components(g, g.vertices() - X))
    if (w.exceeds(comp, kHalf)) return comp;
  return std::nullopt;
}

Separation canonical_separation(const Graph& g, const Weighting& w, const VertexSet& X) {
  auto B = heavy_component(g, w, X);
  if (!B) throw BalancedInputError("X is a (w, 1/2)-balanced separator; no canonical separation", to_json(X));
  return Separation{g.vertices() - X - *B, X, *B};
}

VertexSet clique_extension(const Graph& g, const VertexSet& K, const VertexSet& A) {
  if (!g.is_clique(K)) throw std::invalid_argument("clique_extension needs a clique");
  if (K.size() <= 1) return K;
  auto extend = [&](int x, int y) { return K | (g.neighbours(x) & g.neighbours(y) & A); };
  auto diamond = [&](int x, int y, const VertexSet& R) {
    for (int a : R)
      for (int b : R)
        if (a < b && !g.adjacent(a, b)) {
          PatternWitness d;
          d.kind = "diamond";
          d.roles["spine"] = {x, y};
          d.roles["tips"] = {a, b};
          return to_json(d);
        }
    return nlohmann::json(nullptr);
  };
  int x = K.front(), y = K.next(x);
  VertexSet R = extend(x, y);
  if (!g.is_clique(R)) throw PreconditionError("c_A(K) is not a clique: the graph has a diamond", diamond(x, y, R));
  for (int a : K)
    for (int b : K)
      if (a < b && extend(a, b) != R) {
        int z = (R ^ extend(a, b)).front();
        throw PreconditionError("c_A(K) depends on the chosen pair: the graph has a diamond",
                                nlohmann::json{{"pair_a", {x, y}}, {"pair_b", {a, b}}, {"vertex", z}});
      }
  return R;
}

CliquePair closure(const Graph& g, const Weighting& w, const VertexSet& K1, const VertexSet& K2) {
  if (!g.is_clique(K1) || !g.is_clique(K2)) throw std::invalid_argument("closure needs two cliques");
  Separation s = canonical_separation(g, w, K1 | K2);
  VertexSet NB = g.neighbours(s.B);
  VertexSet AC = s.A | s.C;
  VertexSet c1 = clique_extension(g, K1 & NB, AC);
  VertexSet c2 = clique_extension(g, K2 & NB, AC);
  if (c1.empty()) std::swap(c1, c2);
  return CliquePair{c1, c2, true};
}

std::vector<CliquePair> family_X(const Graph& g, const Weighting& w) {
  std::vector<VertexSet> cliques;
  for_each_clique(g, g.vertices(), [&](const VertexSet& K) {
    cliques.push_back(K);
    if (cliques.size() > kFamilyCliqueCap) throw ScaleError("family_X: too many cliques");
    return false;
  });
  std::map<VertexSet, CliquePair> out;
  auto consider = [&](const VertexSet& K1, const VertexSet& K2) {
    VertexSet X = K1 | K2;
    if (!heavy_component(g, w, X)) return;
    CliquePair p = closure(g, w, K1, K2);
    if (p.X().empty()) return;
    out.emplace(p.X(), p);
  };
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    consider(cliques[i], VertexSet{});
    for (std::size_t j = i + 1; j < cliques.size(); ++j) consider(cliques[i], cliques[j]);
  }
  std::vector<CliquePair> result;
  for (auto& [X, p] : out) result.push_back(p);
  return result;
}

bool is_shield(const Graph& g, const Weighting& w, const VertexSet& X, const VertexSet& Xp) {
  Separation s = canonical_separation(g, w, X);
  Separation sp = canonical_separation(g, w, Xp);
  VertexSet bc = s.B | s.C, bcp = sp.B | sp.C;
  if (bc != bcp && bc.is_subset_of(bcp)) return true;
  return bc == bcp && sp.B != s.B && sp.B.is_subset_of(s.B);
}

std::vector<CliquePair> core_of(const Graph& g, const Weighting& w, const std::vector<CliquePair>& family) {
  std::vector<CliquePair> core;
  for (const CliquePair& p : family) {
    bool shielded = false;
    for (const CliquePair& q : family)
      if (is_shield(g, w, q.X(), p.X())) {
        shielded = true;
        break;
      }
    if (!shielded) core.push_back(p);
  }
  return core;
}

bool loosely_non_crossing(const Graph& g, const Separation& s1, const Separation& s2) {
  VertexSet from = s1.A & s2.C, to = s2.A & s1.C;
  if (from.empty() || to.empty()) return true;
  return !connecting_path(g, from, to, s1.A & s2.A).has_value();
}

}  // namespace clockfree
