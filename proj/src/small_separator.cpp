// Tiered balanced-separator search with a provenance trace.

#include <algorithm>

#include "clockfree/cliques.hpp"
#include "clockfree/cutsets.hpp"
#include "clockfree/patterns.hpp"
#include "clockfree/separations.hpp"
#include "clockfree/serialize.hpp"
#include "clockfree/treewidth.hpp"

namespace clockfree {

namespace {

// Largest s with sum_{i<=s} C(n, i) <= cap.
int affordable_size(int n, std::size_t cap) {
  double total = 0, term = 1;
  for (int s = 0; s <= n; ++s) {
    if (s > 0) term = term * (n - s + 1) / s;
    total += term;
    if (total > static_cast<double>(cap)) return s - 1;
  }
  return n;
}

// Grow X from the heavy component until balanced, then drop redundant vertices.
VertexSet greedy_separator(const Graph& g, const Weighting& w) {
  VertexSet X;
  while (auto B = heavy_component(g, w, X)) {
    int best = -1;
    std::int64_t best_load = 0;
    for (int v : *B) {
      std::int64_t load = 0;
      for (const VertexSet& c : components(g, *B - VertexSet::single(v))) load = std::max(load, w.sum(c));
      if (best < 0 || load < best_load) {
        best = v;
        best_load = load;
      }
    }
    X.insert(best);
  }
  for (int v : VertexSet(X))
    if (is_balanced_separator(g, w, X.without(v), kHalf)) X.erase(v);
  return X;
}

json symbolic_constants() {
  return json{{"q", "q(t, t), from the bounded-degree dense-components theorem"},
              {"n", "q + 1"},
              {"c", "max{4t, n(2t + 1)}"},
              {"f", "f(t), the clean-class treewidth function"}};
}

}  // namespace

SeparatorResult find_small_separator(const Graph& g, const Weighting& w, int t) {
  if (w.order() != g.order()) throw std::invalid_argument("weighting and graph differ in order");
  if (auto clock = find_pattern(g, Pattern::clock))
    throw PreconditionError("graph contains a clock", to_json(*clock));
  SeparatorResult out;
  json& trace = out.trace;
  trace["t"] = t;
  trace["order"] = g.order();
  trace["symbolic"] = symbolic_constants();
  trace["steps"] = json::array();
  auto step = [&](const std::string& name, json detail) {
    trace["steps"].push_back(json{{"step", name}, {"detail", std::move(detail)}});
  };
  int omega = clique_number(g);
  auto diamond = find_pattern(g, Pattern::diamond);
  auto star = find_star_cutset(g);
  trace["hypotheses"] = json{{"clock_free", true},
                             {"diamond_free", !diamond.has_value()},
                             {"no_star_cutset", !star.has_value()},
                             {"omega", omega},
                             {"omega_at_most_t", omega <= t}};
  auto finish = [&](const VertexSet& X, int tier) {
    out.separator = X;
    out.tier = tier;
    trace["tier"] = tier;
    trace["separator"] = to_json(X);
    trace["size"] = X.size();
    trace["verified"] = is_balanced_separator(g, w, X, kHalf);
    return out;
  };

  // tier 1: reduce through clique atoms
  if (diamond || star) {
    try {
      TreeDecomposition td = decomposition_from_atoms(g);
      VertexSet X = separator_from_decomposition(g, td, w, kHalf);
      step("atoms", json{{"width", td.width()}, {"bags", td.bags.size()}});
      if (is_balanced_separator(g, w, X, kHalf)) return finish(X, 1);
      step("atoms", "separator failed verification");
    } catch (const std::exception& e) {
      step("atoms", std::string("skipped: ") + e.what());
    }
  }

  // tier 2: direct search up to 4ω
  int limit = std::min(4 * omega, affordable_size(g.order(), kSubsetSearchCap));
  if (auto X = minimum_balanced_separator(g, w, kHalf, limit)) {
    step("direct", json{{"size_limit", limit}});
    return finish(*X, 2);
  }
  step("direct", json{{"size_limit", limit}, {"found", false}});

  // tier 3: central bag
  try {
    auto family = family_X(g, w);
    auto core = core_of(g, w, family);
    json pairs = json::array();
    for (std::size_t i = 0; i < core.size(); ++i)
      for (std::size_t j = i + 1; j < core.size(); ++j) {
        Separation a = canonical_separation(g, w, core[i].X()), b = canonical_separation(g, w, core[j].X());
        if (!loosely_non_crossing(g, a, b) || !loosely_non_crossing(g, b, a)) pairs.push_back({i, j});
      }
    step("family", json{{"family_size", family.size()}, {"core_size", core.size()}, {"crossing_pairs", pairs}});
    ExtendedBag bag = extend_bag(g, w, central_bag(g, w, core));
    InducedSubgraph sub = induced_subgraph(g, bag.beta_star);
    Weighting ws = bag.w_star.restrict(sub.to_parent);
    TreewidthResult tw = exact_treewidth(sub.graph);
    VertexSet S = sub.lift(separator_from_decomposition(sub.graph, tw.decomposition, ws, kHalf));
    LiftResult lift = lift_separator(g, w, bag, S, t);
    step("bag", json{{"beta", to_json(bag.beta)},
                     {"beta_star", to_json(bag.beta_star)},
                     {"treewidth", tw.width},
                     {"S", to_json(S)},
                     {"lift", to_json(lift)}});
    if (lift.verified) return finish(lift.Y, 3);
  } catch (const std::exception& e) {
    step("bag", std::string("abandoned: ") + e.what());
  }

  // tier 4: exact when affordable, else greedy
  int full = affordable_size(g.order(), kSubsetSearchCap);
  if (auto X = minimum_balanced_separator(g, w, kHalf, full)) {
    step("fallback", json{{"method", "exhaustive"}, {"size_limit", full}});
    return finish(*X, 4);
  }
  step("fallback", json{{"method", "greedy"}});
  return finish(greedy_separator(g, w), 4);
}

}  // namespace clockfree
