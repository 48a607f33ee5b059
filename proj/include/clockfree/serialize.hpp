#pragma once

#include <json.hpp>

#include "clockfree/cutsets.hpp"
#include "clockfree/graph.hpp"
#include "clockfree/patterns.hpp"
#include "clockfree/separations.hpp"
#include "clockfree/treewidth.hpp"
#include "clockfree/weighting.hpp"

namespace clockfree {

using nlohmann::json;

json to_json(const VertexSet& s);
json to_json(const PatternWitness& w);
json to_json(const MinimalConnector& c);
json to_json(const Cutset& c);
json to_json(const AtomTree& t);
json to_json(const CutsetWitness& w);
json to_json(const TheoremSearchResult& r);
json to_json(const TreeDecomposition& td);
json to_json(const Separation& s);
json to_json(const CliquePair& p);
json to_json(const ExtendedBag& bag);
json to_json(const LiftResult& r);
// {"v": "p/q"} for every vertex with non-zero weight.
json to_json(const Weighting& w);

VertexSet vertex_set_from_json(const json& j);
PatternWitness witness_from_json(const json& j);
TreeDecomposition decomposition_from_json(const json& j);
// Object {vertex: "p/q"}; vertices not listed get weight 0. Throws
// std::invalid_argument unless the values sum to exactly 1.
Weighting weighting_from_json(const json& j, int n);

}  // namespace clockfree
