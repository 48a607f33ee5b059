// Verification suites S1..S12. Each instance is checked by code that does not
// share logic with the routine under test wherever that is practical.

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <stdexcept>

#include "clockfree/cliques.hpp"
#include "clockfree/cutsets.hpp"
#include "clockfree/graph_io.hpp"
#include "clockfree/harness.hpp"
#include "clockfree/obstructions.hpp"
#include "clockfree/patterns.hpp"
#include "clockfree/separations.hpp"
#include "clockfree/serialize.hpp"
#include "clockfree/treewidth.hpp"

namespace clockfree {

namespace {

struct Tally {
  std::int64_t total = 0, hypothesis = 0, passed = 0, failed = 0;
  std::vector<Counterexample> cx;
  json rows = json::array();

  void pass() {
    ++hypothesis;
    ++passed;
  }
  void fail(const Graph& g, json why) {
    ++hypothesis;
    ++failed;
    if (cx.size() < kCounterexampleCap) cx.push_back({encode_graph6(g), std::move(why)});
  }
  void check(bool ok, const Graph& g, json why) { ok ? pass() : fail(g, std::move(why)); }
  void merge(Tally& o) {
    total += o.total;
    hypothesis += o.hypothesis;
    passed += o.passed;
    failed += o.failed;
    for (auto& c : o.cx)
      if (cx.size() < kCounterexampleCap) cx.push_back(std::move(c));
    for (auto& r : o.rows) rows.push_back(std::move(r));
  }
};

Tally merged(std::vector<Tally>& parts) {
  Tally all;
  for (Tally& t : parts) all.merge(t);
  return all;
}

// Independent checkers: plain loops and a breadth-first search of our own.

bool brute_diamond(const Graph& g) {
  int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          int m = g.adjacent(a, b) + g.adjacent(a, c) + g.adjacent(a, d) + g.adjacent(b, c) + g.adjacent(b, d) +
                  g.adjacent(c, d);
          if (m == 5) return true;
        }
  return false;
}

bool pairwise_clique(const Graph& g, const VertexSet& K) {
  for (int a : K)
    for (int b : K)
      if (a < b && !g.adjacent(a, b)) return false;
  return true;
}

std::vector<VertexSet> bfs_components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet seen;
  for (int s : within) {
    if (seen.contains(s)) continue;
    VertexSet comp;
    std::vector<int> stack{s};
    seen.insert(s);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.insert(x);
      for (int y = 0; y < g.order(); ++y)
        if (g.adjacent(x, y) && within.contains(y) && !seen.contains(y)) {
          seen.insert(y);
          stack.push_back(y);
        }
    }
    out.push_back(comp);
  }
  return out;
}

bool own_separates(const Graph& g, const VertexSet& X, const VertexSet& Y, const VertexSet& Z) {
  if (X.intersects(Y) || X.intersects(Z) || Y.intersects(Z)) return false;
  for (const VertexSet& c : bfs_components(g, g.vertices() - X))
    if (c.intersects(Y) && c.intersects(Z)) return false;
  return true;
}

bool own_balanced(const Graph& g, const Weighting& w, const VertexSet& X) {
  for (const VertexSet& c : bfs_components(g, g.vertices() - X)) {
    Rational sum(0);
    for (int v : c) sum += w.at(v);
    if (sum > Rational(1, 2)) return false;
  }
  return true;
}

// (A, X, B) with B the heavy component, computed without the library.
std::optional<Separation> own_separation(const Graph& g, const Weighting& w, const VertexSet& X) {
  for (const VertexSet& c : bfs_components(g, g.vertices() - X)) {
    Rational sum(0);
    for (int v : c) sum += w.at(v);
    if (sum > Rational(1, 2)) return Separation{g.vertices() - X - c, X, c};
  }
  return std::nullopt;
}

bool own_shield(const Separation& s, const Separation& sp) {
  VertexSet bc = s.B | s.C, bcp = sp.B | sp.C;
  if (bc != bcp && bc.is_subset_of(bcp)) return true;
  return bc == bcp && sp.B != s.B && sp.B.is_subset_of(s.B);
}

bool connected_graph(const Graph& g) { return g.order() > 0 && bfs_components(g, g.vertices()).size() == 1; }

PatternWitness make_paw(int a, int a2, int v, int u) {
  PatternWitness w;
  w.kind = "paw";
  w.roles = {{"a", {a}}, {"a_prime", {a2}}, {"v", {v}}, {"u", {u}}};
  return w;
}

PatternWitness make_seagull(int a, int v, int u) {
  PatternWitness w;
  w.kind = "seagull";
  w.roles = {{"a", {a}}, {"v", {v}}, {"u", {u}}};
  return w;
}

bool claw_center_within(const Graph& g, int a, const VertexSet& Q) {
  std::vector<int> nb = (g.neighbours(a) & Q).to_vector();
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      for (std::size_t k = j + 1; k < nb.size(); ++k)
        if (!g.adjacent(nb[i], nb[j]) && !g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) return true;
  return false;
}

bool clock_diamond_free(const Graph& g) { return !has_diamond(g) && !has_clock(g); }

bool no_star_cutset(const Graph& g) { return !find_star_cutset(g).has_value(); }

void put(SuiteReport& r, Tally& t) {
  r.total = t.total;
  r.hypothesis = t.hypothesis;
  r.passed = t.passed;
  r.failed = t.failed;
  r.counterexamples = std::move(t.cx);
  for (auto& row : t.rows) r.table.push_back(std::move(row));
}

Rng instance_rng(std::uint64_t seed, std::size_t i) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
  return Rng(seq);
}

// ---------------------------------------------------------------- S1, S2

void suite_diamond(const SuiteParams& p, SuiteReport& rep) {
  std::vector<Tally> parts;
  auto levels = enumerate_hereditary(p.nmax, [](const Graph&) { return true; }, p.jobs);
  for (int n = 1; n <= p.nmax; ++n) {
    const auto& gs = levels[n];
    std::vector<Tally> tl(gs.size());
    parallel_for(gs.size(), p.jobs, [&](std::size_t i) {
      const Graph& g = gs[i];
      if (!connected_graph(g)) return;
      Tally& t = tl[i];
      ++t.total;
      auto star = find_star_cutset(g);
      if (g.order() <= kStarOracleCap && star.has_value() != find_star_cutset_exhaustive(g).has_value()) {
        t.fail(g, json{{"reason", "star cutset test disagrees with the exhaustive oracle"}});
        return;
      }
      if (star || has_clock(g)) return;
      t.check(!brute_diamond(g), g, json{{"reason", "clock-free graph without star cutset contains a diamond"}});
    });
    for (auto& t : tl) parts.push_back(std::move(t));
  }
  Tally all = merged(parts);
  put(rep, all);
  rep.notes["star_oracle_cross_checked"] = true;
}

void suite_star_to_clique(const SuiteParams& p, SuiteReport& rep) {
  auto levels = enumerate_hereditary(p.nmax, [](const Graph& g) { return !has_clock(g); }, p.jobs);
  std::vector<Tally> parts;
  for (int n = 1; n <= p.nmax; ++n) {
    const auto& gs = levels[n];
    std::vector<Tally> tl(gs.size());
    parallel_for(gs.size(), p.jobs, [&](std::size_t i) {
      const Graph& g = gs[i];
      if (!connected_graph(g)) return;
      Tally& t = tl[i];
      ++t.total;
      if (!find_star_cutset(g)) return;
      auto c = find_clique_cutset(g);
      bool ok = c && pairwise_clique(g, c->X) && bfs_components(g, g.vertices() - c->X).size() >= 2;
      t.check(ok, g, json{{"reason", "star cutset without a clique cutset"}});
    });
    for (auto& t : tl) parts.push_back(std::move(t));
  }
  Tally all = merged(parts);
  put(rep, all);
}

// ---------------------------------------------------------------- S3

void suite_short_pyramids(const SuiteParams& p, SuiteReport& rep) {
  Tally t;
  for (int l2 = 2; l2 <= p.path_len_max; ++l2)
    for (int l3 = l2; l3 <= p.path_len_max; ++l3) {
      Graph g = pyramid_graph({1, l2, l3});
      ++t.total;
      auto sp = find_pattern(g, Pattern::short_pyramid);
      auto clock = find_pattern(g, Pattern::clock);
      bool ok = sp && witness_valid(g, *sp) && clock && witness_valid(g, *clock);
      t.check(ok, g, json{{"lengths", {1, l2, l3}}, {"reason", "short pyramid without a valid clock witness"}});
      t.rows.push_back(json{{"lengths", {1, l2, l3}}, {"clock", clock ? to_json(*clock) : json(nullptr)}});
    }
  put(rep, t);
}

// ---------------------------------------------------------------- S4

void three_path_instances(const Graph& g, bool hyp, Tally& t, std::map<std::string, std::int64_t>& kinds) {
  int n = g.order();
  for (int v = 0; v < n; ++v) {
    std::vector<int> nb = g.neighbours(v).to_vector();
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        for (std::size_t k = j + 1; k < nb.size(); ++k) {
          int x1 = nb[i], x2 = nb[j], x3 = nb[k];
          if (pairwise_clique(g, VertexSet{x1, x2, x3})) continue;
          ++t.total;
          if (!hyp) continue;
          json where{{"v", v}, {"x", {x1, x2, x3}}};
          try {
            PatternWitness q = three_path_config_through(g, v, x1, x2, x3, ThreePathOptions{false});
            std::string why = check_witness(g, q);
            VertexSet vs = q.vertex_set();
            bool ok = why.empty() && vs.contains(v) && vs.contains(x1) && vs.contains(x2) && vs.contains(x3);
            if (ok) ++kinds[q.kind];
            where["reason"] = why.empty() ? "configuration misses a required vertex" : why;
            t.check(ok, g, where);
          } catch (const std::exception& e) {
            where["reason"] = e.what();
            t.fail(g, where);
          }
        }
  }
}

std::vector<Graph> three_path_fixtures() {
  std::vector<Graph> out;
  for (int a = 2; a <= 4; ++a)
    for (int b = a; b <= 4; ++b)
      for (int c = b; c <= 4; ++c) out.push_back(theta_graph({a, b, c}));
  for (int a = 1; a <= 3; ++a)
    for (int b = a; b <= 3; ++b)
      for (int c = b; c <= 3; ++c) out.push_back(prism_graph({a, b, c}));
  return out;
}

void suite_three_path(const SuiteParams& p, SuiteReport& rep) {
  auto levels = enumerate_hereditary(p.nmax, clock_diamond_free, p.jobs);
  std::vector<const Graph*> pool;
  for (int n = 4; n <= p.nmax; ++n)
    for (const Graph& g : levels[n]) pool.push_back(&g);
  std::vector<Tally> tl(pool.size());
  std::vector<std::map<std::string, std::int64_t>> kinds(pool.size());
  parallel_for(pool.size(), p.jobs, [&](std::size_t i) {
    const Graph& g = *pool[i];
    bool hyp = connected_graph(g) && no_star_cutset(g);
    three_path_instances(g, hyp, tl[i], kinds[i]);
  });
  Tally all = merged(tl);
  std::map<std::string, std::int64_t> by_kind;
  for (auto& m : kinds)
    for (auto& [k, c] : m) by_kind[k] += c;
  std::int64_t enumerated = all.hypothesis;
  Tally fx;
  std::map<std::string, std::int64_t> fixture_kinds;
  for (const Graph& g : three_path_fixtures()) {
    bool hyp = clock_diamond_free(g) && connected_graph(g) && no_star_cutset(g);
    three_path_instances(g, hyp, fx, fixture_kinds);
  }
  all.merge(fx);
  put(rep, all);
  rep.notes["enumerated_hypothesis_instances"] = enumerated;
  rep.notes["fixture_hypothesis_instances"] = fx.hypothesis;
  rep.notes["kinds_enumerated"] = by_kind;
  rep.notes["kinds_fixtures"] = fixture_kinds;
}

// ---------------------------------------------------------------- S5, S6

bool check_cutset_witness(const Graph& g, const CutsetWitness& w, int v, int a, const VertexSet& Y,
                          const VertexSet& Z) {
  if (w.b < 0 || w.b >= g.order() || g.adjacent(w.b, a) || w.b == a) return false;
  if (w.K.empty() || !pairwise_clique(g, w.K) || !w.K.is_subset_of(g.closed_neighbours(w.b))) return false;
  if (w.X != w.K.with(v)) return false;
  return own_separates(g, w.X, Y, Z);
}

void paw_instances(const Graph& g, Tally& t) {
  int n = g.order();
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbours(v))
      for (int a : g.neighbours(v))
        for (int a2 : g.neighbours(v)) {
          if (a == a2 || a == u || a2 == u || !g.adjacent(a, a2) || g.adjacent(u, a) || g.adjacent(u, a2)) continue;
          ++t.total;
          json where{{"paw", {{"a", a}, {"a_prime", a2}, {"v", v}, {"u", u}}}};
          try {
            auto r = paw_cutset_witness(g, make_paw(a, a2, v, u), TheoremSearchOptions{false, false});
            bool ok = r.status == SearchStatus::found &&
                      check_cutset_witness(g, *r.witness, v, a, VertexSet::single(u), VertexSet{a, a2});
            where["result"] = to_json(r);
            t.check(ok, g, where);
          } catch (const std::exception& e) {
            where["reason"] = e.what();
            t.fail(g, where);
          }
        }
}

void seagull_instances(const Graph& g, Tally& t, bool want_three_path) {
  int n = g.order();
  for (int v = 0; v < n; ++v)
    for (int a : g.neighbours(v))
      for (int u : g.neighbours(v)) {
        if (a == u || g.adjacent(a, u) || !claw_center_within(g, a, g.vertices())) continue;
        ++t.total;
        json where{{"seagull", {{"a", a}, {"v", v}, {"u", u}}}};
        try {
          auto r = seagull_cutset_witness(g, make_seagull(a, v, u), TheoremSearchOptions{false, want_three_path});
          bool ok = r.status == SearchStatus::found &&
                    check_cutset_witness(g, *r.witness, v, a, VertexSet::single(a), VertexSet::single(u));
          if (ok && want_three_path) {
            ok = r.three_path && witness_valid(g, *r.three_path);
            if (ok) {
              VertexSet Q = r.three_path->vertex_set();
              ok = Q.contains(a) && Q.contains(u) && Q.contains(v) && claw_center_within(g, a, Q);
            }
          }
          where["result"] = to_json(r);
          t.check(ok, g, where);
        } catch (const std::exception& e) {
          where["reason"] = e.what();
          t.fail(g, where);
        }
      }
}

void suite_cutset_theorem(const SuiteParams& p, SuiteReport& rep, bool paw) {
  auto levels = enumerate_hereditary(p.nmax, clock_diamond_free, p.jobs);
  std::vector<const Graph*> pool;
  for (int n = 3; n <= p.nmax; ++n)
    for (const Graph& g : levels[n])
      if (connected_graph(g)) pool.push_back(&g);
  std::vector<Tally> tl(pool.size());
  std::vector<char> hyp(pool.size(), 0);
  parallel_for(pool.size(), p.jobs, [&](std::size_t i) {
    const Graph& g = *pool[i];
    if (!no_star_cutset(g)) return;
    hyp[i] = 1;
    paw ? paw_instances(g, tl[i]) : seagull_instances(g, tl[i], true);
  });
  Tally all = merged(tl);
  std::int64_t graphs = std::count(hyp.begin(), hyp.end(), 1);
  std::int64_t enumerated = all.hypothesis;

  Tally fx;
  std::vector<Graph> fixtures;
  if (paw) {
    for (int a = 1; a <= 3; ++a)
      for (int b = a; b <= 3; ++b)
        for (int c = b; c <= 3; ++c) fixtures.push_back(prism_graph({a, b, c}));
  } else {
    for (int a = 2; a <= 4; ++a)
      for (int b = a; b <= 4; ++b)
        for (int c = b; c <= 4; ++c) fixtures.push_back(theta_graph({a, b, c}));
  }
  for (const Graph& g : fixtures) {
    if (!clock_diamond_free(g) || !no_star_cutset(g)) continue;
    paw ? paw_instances(g, fx) : seagull_instances(g, fx, true);
  }
  // pinned witnesses
  if (paw) {
    Graph g = prism_graph({1, 1, 1});
    auto r = paw_cutset_witness(g, make_paw(1, 2, 0, 3));
    ++fx.total;
    fx.check(r.witness && r.witness->b == 5 && r.witness->K == VertexSet{4, 5}, g,
             json{{"reason", "prism fixture witness differs from b = b3, K = {b2, b3}"}, {"result", to_json(r)}});
  } else {
    Graph g = theta_graph({3, 3, 3});
    auto r = seagull_cutset_witness(g, make_seagull(0, 2, 3));
    ++fx.total;
    fx.check(r.witness && r.witness->b == 1 && r.witness->K == VertexSet{1}, g,
             json{{"reason", "theta fixture witness differs from b = q, K = {q}"}, {"result", to_json(r)}});
  }
  all.merge(fx);
  put(rep, all);
  rep.notes["hypothesis_graphs"] = graphs;
  rep.notes["enumerated_hypothesis_instances"] = enumerated;
  rep.notes["fixture_hypothesis_instances"] = fx.hypothesis;
}

// ---------------------------------------------------------------- S7

struct WeightedInstance {
  Graph g;
  Weighting w;
  std::string origin;
};

Weighting heavy_on(int n, int v, const Rational& heavy) {
  std::vector<Rational> ws(n, (Rational(1) - heavy) / (n - 1));
  ws[v] = heavy;
  return Weighting::from_rationals(ws);
}

Graph cycle(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return b.build();
}

std::vector<WeightedInstance> planted_instances() {
  std::vector<WeightedInstance> out;
  std::vector<Rational> w6(6, Rational(2, 25));
  w6[3] = Rational(3, 5);
  out.push_back({cycle(6), Weighting::from_rationals(w6), "C6/W6"});
  for (int n = 5; n <= 12; ++n)
    for (int v = 0; v < n; v += 3) out.push_back({cycle(n), heavy_on(n, v, Rational(3, 5)), "cycle"});
  for (auto L : std::vector<std::array<int, 3>>{{2, 2, 2}, {2, 3, 3}, {3, 3, 3}, {2, 3, 4}}) {
    Graph g = theta_graph(L);
    for (int v = 0; v < g.order(); v += 2) out.push_back({g, heavy_on(g.order(), v, Rational(2, 3)), "theta"});
  }
  for (auto L : std::vector<std::array<int, 3>>{{1, 1, 1}, {1, 2, 2}, {2, 2, 3}}) {
    Graph g = prism_graph(L);
    for (int v = 0; v < g.order(); v += 2) out.push_back({g, heavy_on(g.order(), v, Rational(3, 5)), "prism"});
  }
  return out;
}

WeightedInstance random_diamond_free_instance(std::uint64_t seed, std::size_t i, int nmax) {
  Rng rng = instance_rng(seed, i);
  int n = std::uniform_int_distribution<int>(4, std::max(4, nmax))(rng);
  double p = std::uniform_real_distribution<double>(0.15, 0.6)(rng);
  Graph g = random_diamond_free(n, p, rng);
  return {g, random_weighting(n, rng), "random"};
}

void noncross_instance(const WeightedInstance& in, Tally& t) {
  const Graph& g = in.g;
  ++t.total;
  std::vector<CliquePair> core;
  try {
    core = core_of(g, in.w, family_X(g, in.w));
  } catch (const ScaleError&) {
    return;
  }
  std::vector<Separation> seps;
  for (const CliquePair& X : core) seps.push_back(*own_separation(g, in.w, X.X()));
  for (std::size_t i = 0; i < seps.size(); ++i)
    for (std::size_t j = i + 1; j < seps.size(); ++j)
      if (!loosely_non_crossing(g, seps[i], seps[j]) || !loosely_non_crossing(g, seps[j], seps[i])) return;
  ExtendedBag bag = central_bag(g, in.w, core);
  VertexSet beta = g.vertices();
  for (const Separation& s : seps) beta &= s.B | s.C;
  bool ok = bag.beta == beta && bag.assignment_ok;
  for (const VertexSet& D : bfs_components(g, g.vertices() - beta)) {
    bool inside = false;
    for (const Separation& s : seps) inside = inside || D.is_subset_of(s.A);
    ok = ok && inside;
  }
  t.check(ok, g,
          json{{"reason", "a component of G minus the central bag lies in no A-side"},
               {"origin", in.origin},
               {"weights", to_json(in.w)}});
}

void suite_noncross(const SuiteParams& p, SuiteReport& rep) {
  auto planted = planted_instances();
  std::size_t count = static_cast<std::size_t>(p.samples);
  std::vector<Tally> tl(count + planted.size());
  parallel_for(tl.size(), p.jobs, [&](std::size_t i) {
    if (i < count)
      noncross_instance(random_diamond_free_instance(p.seed, i, std::min(p.nmax, 12)), tl[i]);
    else
      noncross_instance(planted[i - count], tl[i]);
  });
  Tally all = merged(tl);
  put(rep, all);
  rep.notes["planted"] = planted.size();
}

// ---------------------------------------------------------------- S8

bool trace_well_formed(const json& tr, const SeparatorResult& r) {
  if (!tr.is_object()) return false;
  for (const char* key : {"tier", "separator", "size", "verified", "hypotheses", "steps", "symbolic"})
    if (!tr.contains(key)) return false;
  if (!tr["steps"].is_array() || !tr["hypotheses"].is_object()) return false;
  if (tr["tier"].get<int>() != r.tier || r.tier < 1 || r.tier > 4) return false;
  if (vertex_set_from_json(tr["separator"]) != r.separator) return false;
  return tr["size"].get<int>() == r.separator.size() && tr["verified"].get<bool>();
}

void pipeline_instance(const Graph& g, const Weighting& w, int t, Tally& tl, int& tier) {
  ++tl.total;
  try {
    SeparatorResult r = find_small_separator(g, w, t);
    tier = r.tier;
    bool ok = own_balanced(g, w, r.separator) && trace_well_formed(r.trace, r);
    tl.check(ok, g, json{{"reason", "unsound separator or malformed trace"}, {"weights", to_json(w)}, {"trace", r.trace}});
  } catch (const std::exception& e) {
    tl.fail(g, json{{"reason", e.what()}, {"weights", to_json(w)}});
  }
}

void suite_pipeline(const SuiteParams& p, SuiteReport& rep) {
  std::vector<WeightedInstance> planted;
  for (WeightedInstance& in : planted_instances())
    if (!has_clock(in.g)) planted.push_back(std::move(in));
  std::size_t count = static_cast<std::size_t>(p.samples);
  std::vector<Tally> tl(count + planted.size());
  std::vector<int> tiers(tl.size(), 0);
  parallel_for(tl.size(), p.jobs, [&](std::size_t i) {
    if (i >= count) {
      pipeline_instance(planted[i - count].g, planted[i - count].w, p.t, tl[i], tiers[i]);
      return;
    }
    Rng rng = instance_rng(p.seed, i);
    int n = std::uniform_int_distribution<int>(4, std::max(4, p.nmax))(rng);
    double prob = std::uniform_real_distribution<double>(0.1, 0.5)(rng);
    Graph g = random_clock_free(n, prob, rng);
    pipeline_instance(g, random_weighting(n, rng), p.t, tl[i], tiers[i]);
  });
  Tally all = merged(tl);
  put(rep, all);
  std::map<std::string, std::int64_t> by_tier;
  for (int x : tiers)
    if (x) ++by_tier[std::to_string(x)];
  rep.notes["tiers"] = by_tier;
  rep.notes["planted"] = planted.size();
}

// ---------------------------------------------------------------- S9

void suite_clean_sweep(const SuiteParams& p, SuiteReport& rep) {
  auto levels = enumerate_hereditary(p.nmax, [](const Graph& g) { return !has_clock(g); }, p.jobs);
  Tally all;
  for (int n = 1; n <= p.nmax; ++n) {
    const auto& gs = levels[n];
    std::vector<int> tw(gs.size(), -1);
    parallel_for(gs.size(), p.jobs, [&](std::size_t i) {
      if (is_t_clean(gs[i], p.t).clean) tw[i] = exact_treewidth(gs[i]).width;
    });
    int best = -1, clean = 0;
    std::string example;
    for (std::size_t i = 0; i < gs.size(); ++i) {
      if (tw[i] < 0) continue;
      ++clean;
      if (tw[i] > best) {
        best = tw[i];
        example = encode_graph6(gs[i]);
      }
    }
    all.total += static_cast<std::int64_t>(gs.size());
    all.hypothesis += clean;
    all.passed += clean;
    all.rows.push_back(json{{"n", n}, {"clock_free", gs.size()}, {"t_clean", clean}, {"max_treewidth", best},
                            {"example", example}});
  }
  put(rep, all);
}

// ---------------------------------------------------------------- S10

void suite_pohoata_davies(const SuiteParams& p, SuiteReport& rep) {
  Tally t;
  int prev = -1;
  for (int h = 1; h <= p.hmax; ++h) {
    Graph g = pohoata_davies(h);
    ++t.total;
    auto wheel = find_pattern(g, Pattern::wheel);
    auto clock = find_pattern(g, Pattern::clock);
    bool has_clock_ok = clock && witness_valid(g, *clock);
    CleanResult clean = is_t_clean(g, 3);
    int tw = exact_treewidth(g).width;
    json row{{"h", h},       {"order", g.order()},         {"wheel_free", !wheel}, {"clock", has_clock_ok},
             {"clean", clean.clean}, {"treewidth", tw}};
    json problems = json::array();
    if (wheel) problems.push_back("contains a wheel");
    if (!has_clock_ok) problems.push_back("contains no clock");
    if (!clean.clean) problems.push_back("not 3-clean: " + clean.family);
    if (tw < prev) problems.push_back("treewidth decreased");
    prev = tw;
    t.check(problems.empty(), g, json{{"h", h}, {"problems", problems}});
    t.rows.push_back(row);
  }
  put(rep, t);
}

// ---------------------------------------------------------------- S11

void claw_paths(const Graph& g, std::vector<int>& path, VertexSet& on, Tally& t) {
  int a = path.front(), y = path[1];
  VertexSet rest = on.without(a);
  for (int x : g.neighbours(a))
    for (int v : g.neighbours(a)) {
      if (x >= v || x == y || v == y || g.adjacent(x, y) || g.adjacent(v, y) || g.adjacent(x, v)) continue;
      ++t.total;
      bool ok = (g.neighbours(x) & rest).empty() || (g.neighbours(v) & rest).empty();
      t.check(ok, g, json{{"path", path}, {"x", x}, {"v", v}});
    }
  int last = path.back();
  for (int z : g.neighbours(last)) {
    if (on.contains(z)) continue;
    // induced: z sees only the last vertex of the path
    if ((g.neighbours(z) & on).size() != 1) continue;
    path.push_back(z);
    on.insert(z);
    claw_paths(g, path, on, t);
    on.erase(z);
    path.pop_back();
  }
}

void suite_claw(const SuiteParams& p, SuiteReport& rep) {
  auto levels = enumerate_hereditary(p.nmax, [](const Graph& g) { return !has_clock(g); }, p.jobs);
  std::vector<const Graph*> pool;
  for (int n = 4; n <= p.nmax; ++n)
    for (const Graph& g : levels[n]) pool.push_back(&g);
  std::vector<Tally> tl(pool.size());
  parallel_for(pool.size(), p.jobs, [&](std::size_t i) {
    const Graph& g = *pool[i];
    for (int a = 0; a < g.order(); ++a)
      for (int y : g.neighbours(a)) {
        std::vector<int> path{a, y};
        VertexSet on{a, y};
        claw_paths(g, path, on, tl[i]);
      }
  });
  Tally all = merged(tl);
  put(rep, all);
}

// ---------------------------------------------------------------- S12

void shield_instance(const WeightedInstance& in, Tally& t) {
  const Graph& g = in.g;
  const Weighting& w = in.w;
  ++t.total;
  std::vector<CliquePair> family;
  std::vector<VertexSet> cliques;
  try {
    family = family_X(g, w);
    cliques = all_cliques(g, kFamilyCliqueCap);
  } catch (const ScaleError&) {
    return;
  }
  json problems = json::array();
  // closure: idempotent and keeps the heavy side
  std::size_t pairs = 0;
  cliques.insert(cliques.begin(), VertexSet{});
  for (std::size_t i = 0; i < cliques.size() && pairs < 4000; ++i)
    for (std::size_t j = i; j < cliques.size() && pairs < 4000; ++j) {
      VertexSet U = cliques[i] | cliques[j];
      if (U.empty()) continue;
      auto s = own_separation(g, w, U);
      if (!s) continue;
      ++pairs;
      CliquePair c = closure(g, w, cliques[i], cliques[j]);
      if (c.X().empty()) continue;
      auto sc = own_separation(g, w, c.X());
      if (!sc || sc->B != s->B) problems.push_back(json{{"B_changed", {to_json(cliques[i]), to_json(cliques[j])}}});
      CliquePair again = closure(g, w, c.K1, c.K2);
      if (again.X() != c.X()) problems.push_back(json{{"not_idempotent", {to_json(c.K1), to_json(c.K2)}}});
    }
  // shield: strict partial order, agreement with the library
  std::size_t f = family.size();
  std::vector<Separation> seps;
  for (const CliquePair& X : family) seps.push_back(*own_separation(g, w, X.X()));
  std::vector<std::vector<char>> S(f, std::vector<char>(f, 0));
  for (std::size_t i = 0; i < f; ++i)
    for (std::size_t j = 0; j < f; ++j) {
      S[i][j] = own_shield(seps[i], seps[j]);
      if (S[i][j] != static_cast<char>(is_shield(g, w, family[i].X(), family[j].X())))
        problems.push_back(json{{"shield_disagrees", {i, j}}});
    }
  for (std::size_t i = 0; i < f; ++i) {
    if (S[i][i]) problems.push_back(json{{"reflexive", i}});
    for (std::size_t j = 0; j < f; ++j) {
      if (i != j && S[i][j] && S[j][i]) problems.push_back(json{{"symmetric_pair", {i, j}}});
      if (!S[i][j]) continue;
      for (std::size_t k = 0; k < f; ++k)
        if (S[j][k] && !S[i][k]) problems.push_back(json{{"not_transitive", {i, j, k}}});
    }
  }
  // core: minimal elements, and every other member has a core shield
  auto core = core_of(g, w, family);
  std::vector<char> in_core(f, 0);
  for (std::size_t i = 0; i < f; ++i)
    for (const CliquePair& c : core)
      if (c.X() == family[i].X()) in_core[i] = 1;
  for (std::size_t j = 0; j < f; ++j) {
    bool shielded = false, core_shield = false;
    for (std::size_t i = 0; i < f; ++i)
      if (S[i][j]) {
        shielded = true;
        core_shield = core_shield || in_core[i];
      }
    if (in_core[j] && shielded) problems.push_back(json{{"core_member_shielded", j}});
    if (!in_core[j] && !core_shield) problems.push_back(json{{"no_core_shield", j}});
  }
  if (problems.size() > 8) problems.erase(problems.begin() + 8, problems.end());
  t.check(problems.empty(), g, json{{"problems", problems}, {"weights", to_json(w)}, {"origin", in.origin}});
}

void suite_shields(const SuiteParams& p, SuiteReport& rep) {
  auto planted = planted_instances();
  std::size_t count = static_cast<std::size_t>(p.samples);
  std::vector<Tally> tl(count + planted.size());
  parallel_for(tl.size(), p.jobs, [&](std::size_t i) {
    if (i < count)
      shield_instance(random_diamond_free_instance(p.seed + 0x5eed, i, std::min(p.nmax, 12)), tl[i]);
    else
      shield_instance(planted[i - count], tl[i]);
  });
  Tally all = merged(tl);
  put(rep, all);
}

}  // namespace

std::vector<std::string> suite_ids() {
  return {"S1", "S2", "S3", "S4", "S5", "S6", "S7", "S8", "S9", "S10", "S11", "S12"};
}

SuiteReport run_suite(const std::string& id, const SuiteParams& params) {
  SuiteReport rep;
  rep.suite = id;
  rep.seed = params.seed;
  rep.config = json{{"nmax", params.nmax},       {"seed", params.seed}, {"samples", params.samples},
                    {"t", params.t},             {"path_len_max", params.path_len_max},
                    {"hmax", params.hmax}};
  auto start = std::chrono::steady_clock::now();
  if (id == "S1") suite_diamond(params, rep);
  else if (id == "S2") suite_star_to_clique(params, rep);
  else if (id == "S3") suite_short_pyramids(params, rep);
  else if (id == "S4") suite_three_path(params, rep);
  else if (id == "S5") suite_cutset_theorem(params, rep, true);
  else if (id == "S6") suite_cutset_theorem(params, rep, false);
  else if (id == "S7") suite_noncross(params, rep);
  else if (id == "S8") suite_pipeline(params, rep);
  else if (id == "S9") suite_clean_sweep(params, rep);
  else if (id == "S10") suite_pohoata_davies(params, rep);
  else if (id == "S11") suite_claw(params, rep);
  else if (id == "S12") suite_shields(params, rep);
  else throw std::invalid_argument("unknown suite '" + id + "'");
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace clockfree
