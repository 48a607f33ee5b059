// Small-graph enumeration by vertex augmentation and canonical codes.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "clockfree/errors.hpp"
#include "clockfree/graph_ops.hpp"
#include "clockfree/harness.hpp"
#include "clockfree/isomorphism.hpp"

namespace clockfree {

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body) {
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j)
    pool.emplace_back([&, j] {
      (void)j;
      while (!failed) {
        std::size_t i = next++;
        if (i >= count) break;
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

int default_jobs() {
  if (const char* env = std::getenv("CLOCKFREE_JOBS")) {
    int j = std::atoi(env);
    if (j > 0) return j;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::vector<std::vector<Graph>> enumerate_hereditary(int nmax, const std::function<bool(const Graph&)>& keep,
                                                     int jobs) {
  if (nmax < 0) throw std::invalid_argument("nmax must be >= 0");
  if (nmax > kEnumerateCap)
    throw ScaleError("internal enumeration is capped at " + std::to_string(kEnumerateCap) +
                     " vertices; read a graph6 stream instead");
  std::vector<std::vector<Graph>> levels;
  levels.push_back(keep(Graph(0)) ? std::vector<Graph>{Graph(0)} : std::vector<Graph>{});
  for (int n = 1; n <= nmax; ++n) {
    const auto& prev = levels.back();
    std::vector<std::vector<std::uint64_t>> found(prev.size());
    parallel_for(prev.size(), jobs, [&](std::size_t i) {
      const Graph& g = prev[i];
      std::vector<std::uint64_t>& out = found[i];
      for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        GraphBuilder b(g);
        int v = b.add_vertex();
        for (int u = 0; u < n - 1; ++u)
          if (mask >> u & 1) b.add_edge(u, v);
        out.push_back(canonical_code(b.build()));
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    });
    std::vector<std::uint64_t> codes;
    for (auto& f : found) codes.insert(codes.end(), f.begin(), f.end());
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    std::vector<char> ok(codes.size(), 0);
    std::vector<Graph> graphs(codes.size());
    parallel_for(codes.size(), jobs, [&](std::size_t i) {
      graphs[i] = graph_from_code(n, codes[i]);
      ok[i] = keep(graphs[i]);
    });
    std::vector<Graph> level;
    for (std::size_t i = 0; i < codes.size(); ++i)
      if (ok[i]) level.push_back(std::move(graphs[i]));
    levels.push_back(std::move(level));
  }
  return levels;
}

std::vector<Graph> enumerate_graphs(int n, bool connected_only, int jobs) {
  auto levels = enumerate_hereditary(n, [](const Graph&) { return true; }, jobs);
  std::vector<Graph> out;
  for (Graph& g : levels[n])
    if (!connected_only || (n > 0 && is_connected(g, g.vertices()))) out.push_back(std::move(g));
  return out;
}

}  // namespace clockfree
