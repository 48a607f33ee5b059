// Definitional witness checks. Deliberately uses nothing but adjacency
// queries so it shares no logic with the searches it audits.

#include <algorithm>
#include <set>
#include <string>

#include "clockfree/patterns.hpp"

namespace clockfree {

namespace {

using Pairs = std::set<std::pair<int, int>>;

std::pair<int, int> ordered(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

bool distinct_in_range(const Graph& g, const std::vector<int>& vs) {
  std::set<int> seen;
  for (int v : vs) {
    if (v < 0 || v >= g.order() || !seen.insert(v).second) return false;
  }
  return true;
}

// The induced edges on `vs` must be exactly `expected`.
std::string exact_edges(const Graph& g, const std::vector<int>& vs, const Pairs& expected) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      bool want = expected.count(ordered(vs[i], vs[j])) > 0;
      if (g.adjacent(vs[i], vs[j]) != want)
        return (want ? "missing edge " : "unexpected edge ") + std::to_string(vs[i]) + "-" + std::to_string(vs[j]);
    }
  return "";
}

std::string check_hole(const Graph& g, const std::vector<int>& c) {
  if (c.size() < 4) return "hole shorter than 4";
  if (!distinct_in_range(g, c)) return "hole vertices not distinct";
  Pairs e;
  for (std::size_t i = 0; i < c.size(); ++i) e.insert(ordered(c[i], c[(i + 1) % c.size()]));
  return exact_edges(g, c, e);
}

int hole_neighbours(const Graph& g, const std::vector<int>& c, int v) {
  int k = 0;
  for (int x : c)
    if (g.adjacent(v, x)) ++k;
  return k;
}

std::string check_clock_like(const Graph& g, const PatternWitness& w) {
  if (!w.roles.count("hole") || !w.roles.count("center") || w.role("center").size() != 1) return "missing roles";
  const auto& c = w.role("hole");
  std::string why = check_hole(g, c);
  if (!why.empty()) return why;
  int v = w.role("center")[0];
  if (v < 0 || v >= g.order() || std::find(c.begin(), c.end(), v) != c.end()) return "center on the hole";
  if (w.kind == "wheel") return hole_neighbours(g, c, v) >= 3 ? "" : "center has fewer than 3 neighbours on hole";
  bool found = false;
  for (std::size_t i = 0; i < c.size() && !found; ++i)
    for (std::size_t j = i + 1; j < c.size() && !found; ++j)
      if (g.adjacent(v, c[i]) && g.adjacent(v, c[j]) && !g.adjacent(c[i], c[j])) found = true;
  if (!found) return "center lacks two non-adjacent neighbours on hole";
  if (w.kind == "t-clock") {
    if (!w.roles.count("pair") || w.role("pair").size() != 2) return "missing pair";
    int x = w.role("pair")[0], y = w.role("pair")[1];
    auto px = std::find(c.begin(), c.end(), x), py = std::find(c.begin(), c.end(), y);
    if (px == c.end() || py == c.end()) return "pair not on hole";
    if (!g.adjacent(v, x) || !g.adjacent(v, y)) return "pair not adjacent to center";
    long d = std::abs(px - py);
    d = std::min<long>(d, static_cast<long>(c.size()) - d);
    if (d < 2) return "pair adjacent on hole";
  }
  return "";
}

// Paths are vertex sequences; checks ends and collects path edges.
bool path_ok(const std::vector<int>& p, int s, int t, Pairs& e) {
  if (p.size() < 2 || p.front() != s || p.back() != t) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) e.insert(ordered(p[i], p[i + 1]));
  return true;
}

std::string check_three_path(const Graph& g, const PatternWitness& w) {
  if (w.paths.size() != 3) return "need three paths";
  Pairs e;
  std::vector<int> all;
  auto add_all = [&](const std::vector<int>& vs) {
    for (int v : vs)
      if (std::find(all.begin(), all.end(), v) == all.end()) all.push_back(v);
  };
  if (w.kind == "theta") {
    if (!w.roles.count("ends") || w.role("ends").size() != 2) return "missing ends";
    int a = w.role("ends")[0], b = w.role("ends")[1];
    std::vector<int> interior_all;
    for (auto& p : w.paths) {
      if (!path_ok(p, a, b, e)) return "path does not join the ends";
      if (p.size() < 3) return "theta path too short";
      interior_all.insert(interior_all.end(), p.begin() + 1, p.end() - 1);
    }
    interior_all.push_back(a);
    interior_all.push_back(b);
    if (!distinct_in_range(g, interior_all)) return "theta paths overlap";
    add_all(interior_all);
    return exact_edges(g, all, e);
  }
  if (w.kind == "pyramid" || w.kind == "short-pyramid") {
    if (!w.roles.count("apex") || !w.roles.count("base") || w.role("base").size() != 3) return "missing roles";
    int a = w.role("apex")[0];
    const auto& b = w.role("base");
    std::vector<int> rest{a};
    int unit = 0;
    for (int i = 0; i < 3; ++i) {
      if (!path_ok(w.paths[i], a, b[i], e)) return "path does not join apex and base";
      if (w.paths[i].size() == 2) ++unit;
      rest.insert(rest.end(), w.paths[i].begin() + 1, w.paths[i].end());
    }
    if (!distinct_in_range(g, rest)) return "pyramid paths overlap";
    if (unit > 1) return "two paths of length one";
    if (w.kind == "short-pyramid" && unit != 1) return "short pyramid needs one path of length one";
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) e.insert(ordered(b[i], b[j]));
    add_all(rest);
    return exact_edges(g, all, e);
  }
  if (w.kind == "prism") {
    if (!w.roles.count("triangle_a") || !w.roles.count("triangle_b")) return "missing roles";
    const auto& A = w.role("triangle_a");
    const auto& B = w.role("triangle_b");
    if (A.size() != 3 || B.size() != 3) return "triangles need three vertices";
    std::vector<int> rest;
    for (int i = 0; i < 3; ++i) {
      if (!path_ok(w.paths[i], A[i], B[i], e)) return "path does not join the triangles";
      rest.insert(rest.end(), w.paths[i].begin(), w.paths[i].end());
    }
    if (!distinct_in_range(g, rest)) return "prism paths overlap";
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        e.insert(ordered(A[i], A[j]));
        e.insert(ordered(B[i], B[j]));
      }
    add_all(rest);
    return exact_edges(g, all, e);
  }
  return "unknown three-path kind";
}

}  // namespace

std::string check_witness(const Graph& g, const PatternWitness& w) {
  auto role1 = [&](const char* name) -> int {
    auto it = w.roles.find(name);
    if (it == w.roles.end() || it->second.size() != 1) return -1;
    return it->second[0];
  };
  if (w.kind == "hole") {
    if (!w.roles.count("cycle")) return "missing cycle";
    return check_hole(g, w.role("cycle"));
  }
  if (w.kind == "clock" || w.kind == "t-clock" || w.kind == "wheel") return check_clock_like(g, w);
  if (w.kind == "diamond") {
    if (!w.roles.count("spine") || !w.roles.count("tips")) return "missing roles";
    std::vector<int> vs = w.role("spine");
    vs.insert(vs.end(), w.role("tips").begin(), w.role("tips").end());
    if (vs.size() != 4 || !distinct_in_range(g, vs)) return "diamond needs four distinct vertices";
    int edges = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) edges += g.adjacent(vs[i], vs[j]);
    return edges == 5 ? "" : "diamond needs exactly five edges";
  }
  if (w.kind == "paw") {
    int a = role1("a"), a2 = role1("a_prime"), v = role1("v"), u = role1("u");
    std::vector<int> vs{a, a2, v, u};
    if (!distinct_in_range(g, vs)) return "paw needs four distinct vertices";
    return exact_edges(g, vs, {ordered(a, a2), ordered(a, v), ordered(a2, v), ordered(u, v)});
  }
  if (w.kind == "seagull") {
    int v = role1("v"), a = role1("a"), u = role1("u");
    std::vector<int> vs{v, a, u};
    if (!distinct_in_range(g, vs)) return "seagull needs three distinct vertices";
    return exact_edges(g, vs, {ordered(v, a), ordered(v, u)});
  }
  if (w.kind == "claw") {
    int c = role1("center");
    if (!w.roles.count("leaves") || w.role("leaves").size() != 3) return "missing leaves";
    std::vector<int> vs{c};
    vs.insert(vs.end(), w.role("leaves").begin(), w.role("leaves").end());
    if (!distinct_in_range(g, vs)) return "claw needs four distinct vertices";
    return exact_edges(g, vs, {ordered(c, vs[1]), ordered(c, vs[2]), ordered(c, vs[3])});
  }
  if (w.kind == "theta" || w.kind == "pyramid" || w.kind == "short-pyramid" || w.kind == "prism")
    return check_three_path(g, w);
  return "unknown witness kind '" + w.kind + "'";
}

}  // namespace clockfree
