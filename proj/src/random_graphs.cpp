#include <algorithm>

#include "clockfree/harness.hpp"
#include "clockfree/patterns.hpp"

namespace clockfree {

namespace {

std::vector<Edge> shuffled_pairs(int n, Rng& rng) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  return pairs;
}

// A diamond on {u, v, a, b}: four vertices, five edges.
bool diamond_through(const GraphBuilder& b, int u, int v) {
  int n = b.order();
  auto e = [&](int x, int y) { return b.adjacent(x, y) ? 1 : 0; };
  for (int a = 0; a < n; ++a) {
    if (a == u || a == v) continue;
    for (int c = a + 1; c < n; ++c) {
      if (c == u || c == v) continue;
      int m = e(u, v) + e(u, a) + e(u, c) + e(v, a) + e(v, c) + e(a, c);
      if (m == 5) return true;
    }
  }
  return false;
}

}  // namespace

Graph random_graph(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return b.build();
}

Graph random_diamond_free(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (auto [u, v] : shuffled_pairs(n, rng)) {
    if (!coin(rng)) continue;
    b.add_edge(u, v);
    if (diamond_through(b, u, v)) b.remove_edge(u, v);
  }
  return b.build();
}

Graph random_clock_free(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (auto [u, v] : shuffled_pairs(n, rng)) {
    if (!coin(rng)) continue;
    b.add_edge(u, v);
    if (has_clock(b.build())) b.remove_edge(u, v);
  }
  return b.build();
}

Weighting random_weighting(int n, Rng& rng) {
  std::uniform_int_distribution<int> digit(0, 9);
  std::vector<std::int64_t> num(n);
  std::int64_t total = 0;
  for (auto& x : num) total += x = digit(rng);
  if (n > 0 && std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
    // plant: one vertex carries more than everything else
    int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
    total -= num[v];
    num[v] = total + 1 + digit(rng);
    total += num[v];
  }
  if (total == 0) {
    num[0] = 1;
    total = 1;
  }
  return Weighting::from_numerators(num, total);
}

}  // namespace clockfree
