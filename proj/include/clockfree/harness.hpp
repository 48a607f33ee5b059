#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "clockfree/graph.hpp"
#include "clockfree/weighting.hpp"

namespace clockfree {

inline constexpr int kEnumerateCap = 9;

// levels[k] holds every graph on k vertices (k = 0..nmax) up to isomorphism
// for which `keep` holds, in canonical labelling, ordered by canonical code.
// `keep` must be hereditary: closed under deleting vertices.
std::vector<std::vector<Graph>> enumerate_hereditary(int nmax, const std::function<bool(const Graph&)>& keep,
                                                     int jobs = 1);

// Every graph on n vertices up to isomorphism, once each.
std::vector<Graph> enumerate_graphs(int n, bool connected_only, int jobs = 1);

using Rng = std::mt19937_64;

// Erdős–Rényi G(n, p).
Graph random_graph(int n, double p, Rng& rng);
// Edges offered in random order, each with probability p, kept only if the
// graph stays diamond-free (respectively clock-free).
Graph random_diamond_free(int n, double p, Rng& rng);
Graph random_clock_free(int n, double p, Rng& rng);
// Integer numerators drawn from 0..9 (at least one positive), sometimes with
// most of the mass planted on one vertex.
Weighting random_weighting(int n, Rng& rng);

// Runs `body(i)` for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body);

// CLOCKFREE_JOBS if set and positive, else the hardware concurrency.
int default_jobs();

struct SuiteParams {
  int nmax = 8;
  std::uint64_t seed = 1;
  int samples = 1000;
  int t = 3;
  int path_len_max = 4;
  int hmax = 3;
  int jobs = 1;
};

struct Counterexample {
  std::string graph6;
  nlohmann::json witness;
};

struct SuiteReport {
  std::string suite;
  std::int64_t total = 0, hypothesis = 0, passed = 0, failed = 0;
  std::vector<Counterexample> counterexamples;
  nlohmann::json table = nlohmann::json::array();  // data rows, suite specific
  nlohmann::json notes = nlohmann::json::object();
  double seconds = 0;
  std::uint64_t seed = 0;
  nlohmann::json config = nlohmann::json::object();
};

inline constexpr std::size_t kCounterexampleCap = 20;

std::vector<std::string> suite_ids();
// Throws std::invalid_argument for an unknown id.
SuiteReport run_suite(const std::string& id, const SuiteParams& params);

// format: json, csv or text. Timing is left out unless asked for, so equal
// reports give equal bytes.
std::string emit_report(const SuiteReport& report, const std::string& format, bool with_timing = false);

}  // namespace clockfree
