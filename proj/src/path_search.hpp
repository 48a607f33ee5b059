#pragma once

#include <functional>
#include <vector>

#include "clockfree/graph.hpp"

namespace clockfree::detail {

using PathVisitor = std::function<bool(const std::vector<int>&)>;

// Every induced path from s to t with interior inside `interior`, s and t
// distinct. Visitor returns true to stop; the function then returns true.
bool for_each_induced_path(const Graph& g, int s, int t, const VertexSet& interior, const PathVisitor& visit);

// Same, keeping paths whose edge count lies in [min_length, max_length];
// a negative max_length means unbounded.
bool for_each_induced_path(const Graph& g, int s, int t, const VertexSet& interior, int min_length, int max_length,
                           const PathVisitor& visit);

}  // namespace clockfree::detail
