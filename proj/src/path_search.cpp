#include "path_search.hpp"

namespace clockfree::detail {

namespace {

struct Search {
  const Graph& g;
  int t;
  VertexSet interior;
  int min_length, max_length;
  const PathVisitor& visit;
  std::vector<int> path;
  VertexSet on_path;

  // Can t still be reached from `from` using vertices in `open`?
  bool reachable(int from, const VertexSet& open) const {
    VertexSet seen = VertexSet::single(from);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
      VertexSet next;
      for (int u : frontier) next |= g.neighbours(u);
      if (next.contains(t)) return true;
      next &= open;
      next -= seen;
      seen |= next;
      frontier = next;
    }
    return false;
  }

  // `blocked`: closed neighbourhoods of every path vertex except the last.
  bool dfs(const VertexSet& blocked) {
    int last = path.back();
    int edges = static_cast<int>(path.size()) - 1;
    if (g.adjacent(last, t)) {
      // t now has to come next, otherwise it would see a non-final vertex
      if (edges + 1 < min_length) return false;
      if (max_length >= 0 && edges + 1 > max_length) return false;
      path.push_back(t);
      bool stop = visit(path);
      path.pop_back();
      return stop;
    }
    if (max_length >= 0 && edges + 2 > max_length) return false;
    VertexSet next_blocked = blocked | g.closed_neighbours(last);
    VertexSet cand = (g.neighbours(last) & interior) - blocked - on_path;
    for (int u : cand) {
      VertexSet open = interior - next_blocked - on_path;
      if (!reachable(u, open)) continue;
      path.push_back(u);
      on_path.insert(u);
      bool stop = dfs(next_blocked);
      on_path.erase(u);
      path.pop_back();
      if (stop) return true;
    }
    return false;
  }
};

}  // namespace

bool for_each_induced_path(const Graph& g, int s, int t, const VertexSet& interior, int min_length, int max_length,
                           const PathVisitor& visit) {
  if (s == t) return false;
  Search search{g, t, interior.without(s).without(t), min_length, max_length, visit, {s}, VertexSet::single(s)};
  return search.dfs(VertexSet{});
}

bool for_each_induced_path(const Graph& g, int s, int t, const VertexSet& interior, const PathVisitor& visit) {
  return for_each_induced_path(g, s, t, interior, 0, -1, visit);
}

}  // namespace clockfree::detail
