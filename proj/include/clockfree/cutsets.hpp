#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "clockfree/graph.hpp"
#include "clockfree/patterns.hpp"

namespace clockfree {

enum class CutsetFlavour { star, clique, two_clique };

std::string flavour_name(CutsetFlavour f);

// X with G\X disconnected; side1 and side2 are two distinct components of G\X.
struct Cutset {
  CutsetFlavour flavour = CutsetFlavour::star;
  VertexSet X;
  int center = -1;  // star only
  VertexSet side1, side2;
};

// True when side1 and side2 are distinct non-empty components of G\X.
bool certifies_split(const Graph& g, const Cutset& c);

// Complete polynomial test: for each center x (ascending), a star cutset
// centred at x exists iff some non-adjacent p, q outside x have no p-q path
// with interior outside N[x]. The found X is then minimized greedily.
std::optional<Cutset> find_star_cutset(const Graph& g);

// Oracle: every subset X of N[x] containing x, x ascending. Throws ScaleError
// for n > kStarOracleCap.
inline constexpr int kStarOracleCap = 12;
std::optional<Cutset> find_star_cutset_exhaustive(const Graph& g);

// Clique cutsets are tried by size, then lexicographically; the empty clique
// counts when G is disconnected.
std::optional<Cutset> find_clique_cutset(const Graph& g);

struct AtomTree {
  VertexSet vertices;            // ids in the original graph
  std::optional<VertexSet> cut;  // clique cutset splitting this node, if any
  std::vector<AtomTree> children;
};

AtomTree clique_atoms(const Graph& g);
// Leaves of the tree in left-to-right order.
std::vector<VertexSet> atoms_of(const AtomTree& t);

// X separates Y from Z: disjoint sets, no Y-Z path avoiding X.
bool separates(const Graph& g, const VertexSet& X, const VertexSet& Y, const VertexSet& Z);

struct CutsetWitness {
  int b = -1;
  VertexSet K;
  VertexSet X;  // {v} ∪ K
};

enum class SearchStatus { found, hypothesis_violation, not_found };

struct TheoremSearchResult {
  SearchStatus status = SearchStatus::not_found;
  std::optional<CutsetWitness> witness;
  std::string violation;          // which hypothesis failed
  nlohmann::json violation_witness;
  std::optional<PatternWitness> three_path;  // seagull only, on request
};

struct TheoremSearchOptions {
  bool check_hypotheses = true;
  bool want_three_path = false;
};

// Search over b outside N[a] ∪ {u, a'} ascending and cliques K ⊆ N[b] avoiding
// {u, a, a'} (by size, then lexicographically) for X = {v} ∪ K separating {u}
// from {a, a'}. Throws std::invalid_argument if the paw is not induced.
TheoremSearchResult paw_cutset_witness(const Graph& g, const PatternWitness& paw, TheoremSearchOptions opts = {});

// Same search for b non-adjacent to a with {v} ∪ K separating {a} from {u};
// requires a to be a claw center.
TheoremSearchResult seagull_cutset_witness(const Graph& g, const PatternWitness& seagull,
                                           TheoremSearchOptions opts = {});

// A prism, pyramid or theta containing a, u, v in which a is a claw center.
std::optional<PatternWitness> seagull_three_path(const Graph& g, int a, int v, int u);

}  // namespace clockfree
