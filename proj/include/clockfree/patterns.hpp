#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clockfree/graph.hpp"
#include "clockfree/graph_ops.hpp"

namespace clockfree {

enum class Pattern {
  hole,
  wheel,
  clock,
  t_clock,
  diamond,
  paw,
  seagull,
  claw,
  prism,
  pyramid,
  short_pyramid,
  theta,
  three_path_config,
};

struct PatternKind {
  Pattern pattern = Pattern::hole;
  int t = 1;  // only for t_clock
};

std::string pattern_name(Pattern p);
// Accepts the names printed by pattern_name; "t-clock" needs t separately.
Pattern parse_pattern(const std::string& name);

// Role-labelled witness. Roles per kind:
//   hole: cycle            clock/wheel: hole, center     t-clock: + pair
//   diamond: spine, tips   paw: a, a_prime, v, u          seagull: v, a, u
//   claw: center, leaves   theta: ends                    pyramid: apex, base
//   prism: triangle_a, triangle_b
// Three-path configurations list paths[i] from the i-th special vertex of
// the first role to the i-th of the second (theta: a to b).
struct PatternWitness {
  std::string kind;
  std::map<std::string, std::vector<int>> roles;
  std::vector<std::vector<int>> paths;

  const std::vector<int>& role(const std::string& name) const { return roles.at(name); }
  VertexSet vertex_set() const;
  friend bool operator==(const PatternWitness&, const PatternWitness&) = default;
};

inline constexpr int kPatternCap = 64;

std::optional<PatternWitness> find_pattern(const Graph& g, PatternKind kind);
inline std::optional<PatternWitness> find_pattern(const Graph& g, Pattern p) { return find_pattern(g, PatternKind{p, 1}); }

// Definitional check of a witness, independent of the search code.
// Returns an empty string if valid, otherwise the first failed condition.
std::string check_witness(const Graph& g, const PatternWitness& w);
inline bool witness_valid(const Graph& g, const PatternWitness& w) { return check_witness(g, w).empty(); }

// A stable triple in N(v), smallest lexicographic.
std::optional<std::vector<int>> claw_triple(const Graph& g, int v);
inline bool is_claw_center(const Graph& g, int v) { return claw_triple(g, v).has_value(); }

// Smallest neighbour v of u with N(u)\{v} a clique. An isolated u witnesses itself.
std::optional<int> near_simplicial_witness(const Graph& g, int u);

bool is_simplicial(const Graph& g, int v);

// Every hole of length 4..max_length containing `through`, once each,
// reported in cycle order starting at its smallest vertex with the smaller
// neighbour second. Visitor returns true to stop.
void holes_enumerate(const Graph& g, int max_length, const VertexSet& through,
                     const std::function<bool(const std::vector<int>&)>& visit);

// A hole of G[allowed ∪ {x, y}] through non-adjacent x and y, in cycle order from x.
std::optional<std::vector<int>> hole_through(const Graph& g, int x, int y, const VertexSet& allowed);

bool is_chordal(const Graph& g);

// Shorthand predicates used throughout.
bool has_clock(const Graph& g);
bool has_diamond(const Graph& g);

struct MinimalConnector {
  enum class Outcome { path_or_hole = 1, hub = 2, triangle = 3 };
  Outcome outcome = Outcome::path_or_hole;
  VertexSet connector;                  // H
  std::array<int, 3> x{};               // x1, x2, x3 as given
  // path_or_hole
  int i = -1, j = -1, k = -1;           // indices into x (0-based)
  Path path;                            // xi ... xj through H
  bool hole = false;                    // xi adjacent to xj
  bool adjacent_pair = false;           // xk has exactly two adjacent neighbours in H
  std::vector<int> xk_neighbours;
  // hub
  int hub = -1;
  // triangle
  std::array<int, 3> triangle{};
  // hub / triangle: paths[m] runs from the hub (or triangle[m]) to x[m]
  std::array<Path, 3> paths;
};

// Connected H in G\{x1,x2,x3}, minimal under inclusion, with each N(xi)
// meeting H; classified by shape. Throws std::invalid_argument if none exists.
MinimalConnector minimal_connector(const Graph& g, int x1, int x2, int x3);
MinimalConnector minimal_connector(const Graph& g, int x1, int x2, int x3, const VertexSet& region);
// Re-check of the outcome conditions; empty when they hold.
std::string check_connector(const Graph& g, const MinimalConnector& c);

struct ThreePathOptions {
  bool check_hypotheses = true;
};

// A prism, pyramid or theta containing v, x1, x2, x3, built from a minimal
// connector in G\N[v]. Throws PreconditionError when a hypothesis fails.
PatternWitness three_path_config_through(const Graph& g, int v, int x1, int x2, int x3,
                                         ThreePathOptions opts = {});

// Visits every prism, pyramid and theta of G (each several times, once per
// path order). Visitor returns true to stop.
void for_each_three_path_config(const Graph& g, const std::function<bool(const PatternWitness&)>& visit);

}  // namespace clockfree
