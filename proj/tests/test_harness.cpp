#include <doctest.h>

#include "clockfree/harness.hpp"
#include "clockfree/isomorphism.hpp"
#include "clockfree/patterns.hpp"

using namespace clockfree;

TEST_CASE("enumeration counts") {
  CHECK(enumerate_graphs(1, false).size() == 1);
  CHECK(enumerate_graphs(3, false).size() == 4);
  CHECK(enumerate_graphs(3, true).size() == 2);
  CHECK(enumerate_graphs(4, false).size() == 11);
  CHECK(enumerate_graphs(4, true).size() == 6);
  CHECK(enumerate_graphs(5, false).size() == 34);
  CHECK(enumerate_graphs(6, false).size() == 156);
  CHECK(enumerate_graphs(7, true).size() == 853);
}

TEST_CASE("enumeration is free of duplicates") {
  auto gs = enumerate_graphs(6, false, 2);
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) CHECK_FALSE(are_isomorphic(gs[i], gs[j]));
}

TEST_CASE("hereditary enumeration of clock-free graphs") {
  auto levels = enumerate_hereditary(6, [](const Graph& g) { return !has_clock(g); });
  std::size_t direct = 0;
  for (const Graph& g : enumerate_graphs(6, false))
    if (!has_clock(g)) ++direct;
  CHECK(levels[6].size() == direct);
  // the only clocks on five vertices are K_{2,3}, K_{2,3} plus an edge and W4
  CHECK(levels[5].size() == 31);
}

TEST_CASE("random generators respect their classes") {
  Rng rng(9);
  for (int i = 0; i < 30; ++i) {
    CHECK(!has_diamond(random_diamond_free(9, 0.5, rng)));
    CHECK(!has_clock(random_clock_free(9, 0.5, rng)));
    Weighting w = random_weighting(9, rng);
    CHECK(w.of(VertexSet::range(9)) == Rational(1));
  }
}

TEST_CASE("parallel_for visits every index once") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
  CHECK(std::count(hits.begin(), hits.end(), 1) == 1000);
}

TEST_CASE("reports are byte-stable and independent of jobs") {
  SuiteParams p;
  p.nmax = 6;
  p.samples = 40;
  p.seed = 17;
  for (const char* id : {"S1", "S7", "S12"}) {
    SuiteParams q = p;
    q.jobs = 3;
    std::string a = emit_report(run_suite(id, p), "json");
    std::string b = emit_report(run_suite(id, p), "json");
    std::string c = emit_report(run_suite(id, q), "json");
    CHECK(a == b);
    CHECK(a == c);
  }
}

TEST_CASE("report formats") {
  SuiteReport empty;
  empty.suite = "S3";
  CHECK(emit_report(empty, "text") == "suite S3 seed 0\n");
  CHECK(emit_report(empty, "csv") == "suite,total,hypothesis,passed,failed\nS3,0,0,0,0\n");
  SuiteReport r = run_suite("S3", SuiteParams{});
  CHECK(r.failed == 0);
  CHECK(r.total == 6);
  CHECK(emit_report(r, "csv").rfind("clock,lengths\n", 0) == 0);
  CHECK(emit_report(r, "json", true).find("\"seconds\"") != std::string::npos);
  CHECK(emit_report(r, "json").find("\"seconds\"") == std::string::npos);
  CHECK_THROWS_AS(emit_report(r, "xml"), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("S99", SuiteParams{}), std::invalid_argument);
}

TEST_CASE("small suite runs have no failures") {
  SuiteParams p;
  p.nmax = 6;
  p.samples = 50;
  p.hmax = 3;
  for (const std::string& id : suite_ids()) {
    if (id == "S10") continue;
    SuiteReport r = run_suite(id, p);
    CHECK_MESSAGE(r.failed == 0, id);
  }
}

TEST_CASE("Pohoata-Davies suite flags only the clockless first level") {
  SuiteReport r = run_suite("S10", SuiteParams{});
  CHECK(r.total == 3);
  CHECK(r.failed == 1);
  REQUIRE(r.counterexamples.size() == 1);
  CHECK(r.counterexamples[0].witness["h"] == 1);
  CHECK(r.table[2]["treewidth"] == 3);
}
