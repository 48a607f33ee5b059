#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "clockfree/graph.hpp"

namespace clockfree {

inline constexpr int kIsomorphismCap = 64;

// Bijection f with u~v in G iff f(u)~f(v) in H, if one exists.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);
inline bool are_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

inline constexpr int kCanonicalCap = 11;

// Canonical adjacency code: equal iff isomorphic (same order assumed).
// Bit k holds pair k of the column-wise upper triangle after relabelling.
std::uint64_t canonical_code(const Graph& g);
Graph graph_from_code(int n, std::uint64_t code);

}  // namespace clockfree
