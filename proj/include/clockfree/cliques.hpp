#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "clockfree/graph.hpp"

namespace clockfree {

// Visits every non-empty clique inside `within` in lexicographic order of the
// sorted vertex sequence. The visitor returns true to stop early.
// Returns true if stopped.
bool for_each_clique(const Graph& g, const VertexSet& within, const std::function<bool(const VertexSet&)>& visit);

std::vector<VertexSet> all_cliques(const Graph& g, std::size_t cap);

// Lexicographically first maximum clique.
VertexSet maximum_clique(const Graph& g, const VertexSet& within);
inline VertexSet maximum_clique(const Graph& g) { return maximum_clique(g, g.vertices()); }
int clique_number(const Graph& g);

// A stable set of exactly k vertices inside `within`, smallest lexicographic.
std::optional<VertexSet> stable_set_of_size(const Graph& g, const VertexSet& within, int k);

}  // namespace clockfree
