#include "clockfree/cliques.hpp"

#include <optional>

#include "clockfree/errors.hpp"

namespace clockfree {

namespace {

bool extend(const Graph& g, VertexSet& clique, const VertexSet& candidates,
            const std::function<bool(const VertexSet&)>& visit) {
  for (int v : candidates) {
    clique.insert(v);
    if (visit(clique)) return true;
    VertexSet next = candidates & g.neighbours(v);
    // only larger ids keep the enumeration duplicate-free and ordered
    next -= VertexSet::range(v + 1);
    if (extend(g, clique, next, visit)) return true;
    clique.erase(v);
  }
  return false;
}

void max_clique(const Graph& g, VertexSet& cur, VertexSet cand, VertexSet& best) {
  if (cur.size() + cand.size() <= best.size()) return;
  if (cand.empty()) {
    if (cur.size() > best.size()) best = cur;
    return;
  }
  for (int v : cand) {
    if (cur.size() + cand.size() <= best.size()) return;
    cur.insert(v);
    max_clique(g, cur, (cand & g.neighbours(v)) - VertexSet::range(v + 1), best);
    cur.erase(v);
    cand.erase(v);
  }
}

bool stable_search(const Graph& g, VertexSet& cur, VertexSet cand, int k, VertexSet& out) {
  if (cur.size() == k) {
    out = cur;
    return true;
  }
  for (int v : cand) {
    if (cur.size() + cand.size() < k) return false;
    cur.insert(v);
    if (stable_search(g, cur, (cand - g.closed_neighbours(v)) - VertexSet::range(v + 1), k, out)) return true;
    cur.erase(v);
    cand.erase(v);
  }
  return false;
}

}  // namespace

bool for_each_clique(const Graph& g, const VertexSet& within, const std::function<bool(const VertexSet&)>& visit) {
  VertexSet clique;
  return extend(g, clique, within, visit);
}

std::vector<VertexSet> all_cliques(const Graph& g, std::size_t cap) {
  std::vector<VertexSet> out;
  for_each_clique(g, g.vertices(), [&](const VertexSet& k) {
    if (out.size() >= cap) throw ScaleError("clique count exceeds cap " + std::to_string(cap));
    out.push_back(k);
    return false;
  });
  return out;
}

VertexSet maximum_clique(const Graph& g, const VertexSet& within) {
  VertexSet cur, best;
  max_clique(g, cur, within, best);
  return best;
}

int clique_number(const Graph& g) { return maximum_clique(g).size(); }

std::optional<VertexSet> stable_set_of_size(const Graph& g, const VertexSet& within, int k) {
  VertexSet cur, out;
  if (k <= 0) return VertexSet{};
  if (stable_search(g, cur, within, k, out)) return out;
  return std::nullopt;
}

}  // namespace clockfree
