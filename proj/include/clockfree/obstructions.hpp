#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "clockfree/graph.hpp"

namespace clockfree {

enum class ObstructionKind {
  complete,
  complete_bipartite,
  wall,
  line_of_wall,
  pohoata_davies,
  prism,
  pyramid,
  theta,
};

std::string obstruction_name(ObstructionKind k);
ObstructionKind parse_obstruction(const std::string& name);

struct ObstructionParams {
  int t = 1;                            // complete: K_{t+1}; bipartite: K_{t,t}; walls
  int h = 1;                            // pohoata_davies
  int subdivisions = 0;                 // walls: internal vertices added per edge
  std::array<int, 3> lengths{1, 1, 1};  // prism/pyramid/theta path lengths
};

// Throws std::invalid_argument for parameters outside the documented ranges.
Graph generate_obstruction(ObstructionKind kind, const ObstructionParams& p);

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
// t rows by 2t columns, alternate rungs, degree-1 vertices removed. wall(1) = K2.
Graph wall(int t);
Graph subdivided_wall(int t, int subdivisions);
Graph line_of_wall(int t, int subdivisions);
// Complete binary tree of height h with every tree edge subdivided once, plus a
// path through its leaves left to right. Tree vertices keep heap order
// (root 0, children of v at 2v+1, 2v+2); the subdivision vertex of the edge
// into v is tree_size + v - 1.
Graph pohoata_davies(int h);
// Three paths of the given lengths (edges). Theta ends 0 and 1; pyramid apex 0,
// base 1, 2, 3; prism triangles 0, 1, 2 and 3, 4, 5.
Graph theta_graph(const std::array<int, 3>& lengths);
Graph pyramid_graph(const std::array<int, 3>& lengths);
Graph prism_graph(const std::array<int, 3>& lengths);

inline constexpr int kSubdivisionCap = 40;

struct SubdivisionMatch {
  std::vector<int> branch;  // base vertex -> vertex of H
};

// H is a subdivision of base (using all of H). Throws ScaleError past the cap.
std::optional<SubdivisionMatch> is_subdivision_of(const Graph& H, const Graph& base);

inline constexpr int kRootCap = 40;

// A root graph R with L(R) ≅ H, choosing the Krausz partition with the fewest
// cliques (hence the smallest-order root). Isolated vertices of R are omitted.
std::optional<Graph> recover_root_graph(const Graph& H);

struct CleanResult {
  bool clean = true;
  std::string family;  // "complete", "complete-bipartite", "wall", "line-of-wall"
  VertexSet witness;   // vertex set of the induced obstruction
};

inline constexpr int kCleanCap = 32;

CleanResult is_t_clean(const Graph& g, int t);

}  // namespace clockfree
