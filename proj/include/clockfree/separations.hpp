#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "clockfree/errors.hpp"
#include "clockfree/graph.hpp"
#include "clockfree/graph_ops.hpp"
#include "clockfree/weighting.hpp"

namespace clockfree {

inline const Rational kHalf{1, 2};

// Every component of G\X has weight at most c.
bool is_balanced_separator(const Graph& g, const Weighting& w, const VertexSet& X, const Rational& c);

// The component of G\X of weight more than 1/2, if any.
std::optional<VertexSet> heavy_component(const Graph& g, const Weighting& w, const VertexSet& X);

// Raised by operations defined only for X that is not (w, 1/2)-balanced.
class BalancedInputError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

struct Separation {
  VertexSet A, C, B;
  friend bool operator==(const Separation&, const Separation&) = default;
};

// (A, X, B) with B the heavy component of G\X.
Separation canonical_separation(const Graph& g, const Weighting& w, const VertexSet& X);

// K if |K| <= 1, else K ∪ (N(x) ∩ N(y) ∩ A) for the two smallest x, y in K.
// Throws PreconditionError with a diamond witness if the result is not a clique
// or depends on the chosen pair.
VertexSet clique_extension(const Graph& g, const VertexSet& K, const VertexSet& A);

struct CliquePair {
  VertexSet K1, K2;
  bool closed = false;

  VertexSet X() const { return K1 | K2; }
  friend bool operator==(const CliquePair&, const CliquePair&) = default;
};

// c_{A∪C}(K1 ∩ N(B)) ∪ c_{A∪C}(K2 ∩ N(B)) for (A, C, B) = S(K1 ∪ K2). The
// larger-first normalisation puts an empty part in K2.
CliquePair closure(const Graph& g, const Weighting& w, const VertexSet& K1, const VertexSet& K2);

inline constexpr std::size_t kFamilyCliqueCap = 4096;

// Closures of all clique pairs with non-empty, non-balanced union, one entry
// per distinct set X, ordered by X.
std::vector<CliquePair> family_X(const Graph& g, const Weighting& w);

// X is a (w, G)-shield for Xp.
bool is_shield(const Graph& g, const Weighting& w, const VertexSet& X, const VertexSet& Xp);

std::vector<CliquePair> core_of(const Graph& g, const Weighting& w, const std::vector<CliquePair>& family);

// No path with one end in A1 ∩ C2, the other in A2 ∩ C1 and interior in A1 ∩ A2.
bool loosely_non_crossing(const Graph& g, const Separation& s1, const Separation& s2);

struct CoreRecord {
  CliquePair X;
  Separation sep;
  std::vector<VertexSet> components;  // components D of G\β with X(D) = X
  VertexSet D;                        // their union
  Path marker;                        // empty when D is empty
  int anchor = -1;
};

struct ExtendedBag {
  VertexSet beta;
  std::vector<CoreRecord> core;
  std::vector<VertexSet> deleted;     // components of G\β, by smallest vertex
  std::vector<int> assignment;        // deleted[i] -> core index, -1 if none
  bool assignment_ok = true;
  // filled by extend_bag
  bool extended = false;
  VertexSet beta_star;
  Weighting w_star;                   // on all of G, zero outside β*
};

// β = ∩ (B ∪ C) over the core (V(G) for an empty core) and the assignment
// of each component of G\β to the first core element whose A-side holds it.
ExtendedBag central_bag(const Graph& g, const Weighting& w, const std::vector<CliquePair>& core);

// Shortest path with non-adjacent ends in N(D) and interior in D, validated:
// at least three vertices, every interior vertex of degree 2 in G[P ∪ X].
Path marker_path(const Graph& g, const CliquePair& X, const VertexSet& D);

// Marker paths, anchors (smallest interior vertex), β* and w*; every
// invariant is checked and a failure raises PreconditionError.
ExtendedBag extend_bag(const Graph& g, const Weighting& w, ExtendedBag bag);

struct LiftRecord {
  int v = -1;
  std::string rule;  // "marker", "neighbourhood", "z2", "z2-fallback"
  VertexSet Y;
};

struct LiftResult {
  VertexSet Y;
  std::vector<LiftRecord> records;
  std::vector<std::string> violations;
  bool fallback = false;
  bool verified = false;  // Y is a (w, 1/2)-balanced separator of G
  bool within_bound = false;  // |Y| <= |S| (2t + 1)
};

LiftResult lift_separator(const Graph& g, const Weighting& w, const ExtendedBag& bag, const VertexSet& S, int t);

struct SeparatorResult {
  VertexSet separator;
  int tier = 0;
  nlohmann::json trace;
};

inline constexpr std::size_t kSubsetSearchCap = 2'000'000;

// Tiered search; the result always passes is_balanced_separator(·, 1/2).
// Throws PreconditionError carrying a clock witness if G has a clock.
SeparatorResult find_small_separator(const Graph& g, const Weighting& w, int t);

}  // namespace clockfree
