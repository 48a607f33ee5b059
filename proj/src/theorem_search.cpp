// Exhaustive witness searches for the paw and seagull cutset theorems.

#include <algorithm>
#include <stdexcept>

#include "clockfree/cliques.hpp"
#include "clockfree/cutsets.hpp"
#include "clockfree/serialize.hpp"

namespace clockfree {

namespace {

// Fills the result with the first failed hypothesis, if any.
bool hypotheses_fail(const Graph& g, TheoremSearchResult& r) {
  if (auto c = find_pattern(g, Pattern::clock)) {
    r.status = SearchStatus::hypothesis_violation;
    r.violation = "graph contains a clock";
    r.violation_witness = to_json(*c);
    return true;
  }
  if (auto d = find_pattern(g, Pattern::diamond)) {
    r.status = SearchStatus::hypothesis_violation;
    r.violation = "graph contains a diamond";
    r.violation_witness = to_json(*d);
    return true;
  }
  if (auto s = find_star_cutset(g)) {
    r.status = SearchStatus::hypothesis_violation;
    r.violation = "graph has a star cutset";
    r.violation_witness = to_json(*s);
    return true;
  }
  return false;
}

std::vector<VertexSet> cliques_in(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  for_each_clique(g, within, [&](const VertexSet& K) {
    out.push_back(K);
    return false;
  });
  std::stable_sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// First (b, K) with b outside `excluded_b`, K ⊆ N[b] \ avoid and {v} ∪ K
// separating Y from Z.
std::optional<CutsetWitness> search(const Graph& g, int v, const VertexSet& excluded_b, const VertexSet& avoid,
                                    const VertexSet& Y, const VertexSet& Z) {
  for (int b = 0; b < g.order(); ++b) {
    if (excluded_b.contains(b)) continue;
    for (const VertexSet& K : cliques_in(g, g.closed_neighbours(b) - avoid)) {
      VertexSet X = K.with(v);
      if (separates(g, X, Y, Z)) return CutsetWitness{b, K, X};
    }
  }
  return std::nullopt;
}

int role1(const PatternWitness& w, const std::string& name) {
  auto it = w.roles.find(name);
  if (it == w.roles.end() || it->second.size() != 1) throw std::invalid_argument("witness lacks role " + name);
  return it->second[0];
}

}  // namespace

TheoremSearchResult paw_cutset_witness(const Graph& g, const PatternWitness& paw, TheoremSearchOptions opts) {
  if (paw.kind != "paw") throw std::invalid_argument("expected a paw witness");
  std::string why = check_witness(g, paw);
  if (!why.empty()) throw std::invalid_argument("invalid paw: " + why);
  int a = role1(paw, "a"), a2 = role1(paw, "a_prime"), v = role1(paw, "v"), u = role1(paw, "u");
  TheoremSearchResult r;
  if (opts.check_hypotheses && hypotheses_fail(g, r)) return r;
  VertexSet excluded = g.closed_neighbours(a).with(u);
  if (auto w = search(g, v, excluded, VertexSet{u, a, a2}, VertexSet::single(u), VertexSet{a, a2})) {
    r.status = SearchStatus::found;
    r.witness = w;
  }
  return r;
}

std::optional<PatternWitness> seagull_three_path(const Graph& g, int a, int v, int u) {
  std::optional<PatternWitness> out;
  for_each_three_path_config(g, [&](const PatternWitness& q) {
    VertexSet vs = q.vertex_set();
    if (!vs.contains(a) || !vs.contains(v) || !vs.contains(u)) return false;
    InducedSubgraph sub = induced_subgraph(g, vs);
    if (!is_claw_center(sub.graph, sub.to_child[a])) return false;
    out = q;
    return true;
  });
  return out;
}

TheoremSearchResult seagull_cutset_witness(const Graph& g, const PatternWitness& seagull, TheoremSearchOptions opts) {
  if (seagull.kind != "seagull") throw std::invalid_argument("expected a seagull witness");
  std::string why = check_witness(g, seagull);
  if (!why.empty()) throw std::invalid_argument("invalid seagull: " + why);
  int v = role1(seagull, "v"), a = role1(seagull, "a"), u = role1(seagull, "u");
  TheoremSearchResult r;
  if (!is_claw_center(g, a)) {
    r.status = SearchStatus::hypothesis_violation;
    r.violation = "a is not a claw center";
    r.violation_witness = nlohmann::json{{"a", a}};
    return r;
  }
  if (opts.check_hypotheses && hypotheses_fail(g, r)) return r;
  VertexSet excluded = g.closed_neighbours(a).with(u);
  if (auto w = search(g, v, excluded, VertexSet{a, u}, VertexSet::single(a), VertexSet::single(u))) {
    r.status = SearchStatus::found;
    r.witness = w;
  }
  if (opts.want_three_path) r.three_path = seagull_three_path(g, a, v, u);
  return r;
}

}  // namespace clockfree
