#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clockfree/graph.hpp"
#include "clockfree/weighting.hpp"

namespace clockfree {

struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> edges;

  int width() const;
};

inline constexpr int kTreewidthCap = 22;

struct TreewidthResult {
  int width = -1;
  TreeDecomposition decomposition;
  std::vector<int> order;  // elimination ordering realising the width
};

// Exact treewidth by subset dynamic programming over elimination orderings,
// after simplicial and almost-simplicial reductions. Throws ScaleError past the cap.
TreewidthResult exact_treewidth(const Graph& g);

// Width of the decomposition obtained by eliminating in the given order.
int elimination_width(const Graph& g, const std::vector<int>& order);
TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<int>& order);

int min_fill_upper_bound(const Graph& g, std::vector<int>* order = nullptr);
int minor_min_width(const Graph& g);

struct Validation {
  bool ok = true;
  // 0: not a tree, 1: coverage, 2: edge in no bag, 3: vertex bags not connected.
  int axiom = -1;
  std::string message;
};

Validation validate_decomposition(const Graph& g, const TreeDecomposition& td);

using SeparatorOracle = std::function<VertexSet(const Weighting&)>;

// Recursive construction from balanced separators; each oracle answer is
// checked for size <= k and (w, c)-balance. Width is at most m + k - 1 with
// m the smallest integer satisfying floor(c m) + k <= m - 1 (3k for c = 1/2).
TreeDecomposition decomposition_from_separators(const Graph& g, const SeparatorOracle& oracle, int k,
                                                const Rational& c);
int separator_decomposition_bound(int k, const Rational& c);

// Centroid walk to a bag that is a (w, c)-balanced separator.
VertexSet separator_from_decomposition(const Graph& g, const TreeDecomposition& td, const Weighting& w,
                                       const Rational& c);

// Decomposition glued from exact decompositions of the clique atoms.
TreeDecomposition decomposition_from_atoms(const Graph& g);

int gamma_d(const Graph& g, int d);

// Smallest (w, c)-balanced separator, lexicographically first among minimum
// size; cap bounds the size searched (negative: no cap).
std::optional<VertexSet> minimum_balanced_separator(const Graph& g, const Weighting& w, const Rational& c,
                                                    int cap = -1);

}  // namespace clockfree
