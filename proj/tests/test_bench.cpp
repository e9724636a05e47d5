#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <sstream>

#include "phylocover/baselines.hpp"
#include "phylocover/bench.hpp"
#include "phylocover/graph.hpp"
#include "test_util.hpp"

using namespace phylocover;
using namespace testutil;

namespace {

ExperimentConfig tiny_config() {
  ExperimentConfig cfg;
  cfg.sizes = {10};
  cfg.densities = {0.5};
  cfg.runs_per_cell = 2;
  cfg.solvers = {"2approx", "hybrid-ga"};
  cfg.ga_grid = {{1.0, 0.5, 0.5}};
  cfg.base_seed = 42;
  return cfg;
}

}  // namespace

TEST_CASE("run_experiment emits one record per cell x solver x run") {
  const auto records = run_experiment(tiny_config());
  CHECK(records.size() == 4);  // 1 size x 1 density x 2 runs x 2 solvers
  int ga = 0, approx = 0;
  for (const auto& r : records) {
    if (r.solver == "hybrid-ga") ++ga;
    if (r.solver == "2approx") ++approx;
    CHECK(r.cover_ratio_pct ==
          doctest::Approx(100.0 * r.cover_size / r.n));
  }
  CHECK(ga == 2);
  CHECK(approx == 2);
}

TEST_CASE("all solvers of a run share the identical generated graph") {
  auto cfg = tiny_config();
  cfg.solvers = {"2approx", "hybrid-ga", "exact"};
  cfg.sizes = {12};
  const auto records = run_experiment(cfg);
  std::map<int, std::pair<std::uint64_t, int>> per_run;
  for (const auto& r : records) {
    const auto it = per_run.find(r.run);
    if (it == per_run.end()) {
      per_run[r.run] = {r.seed, r.critical_count};
    } else {
      CHECK(it->second.first == r.seed);
      CHECK(it->second.second == r.critical_count);
    }
  }
  CHECK(per_run.size() == 2);
}

TEST_CASE("exact solver record matches enumeration on its regenerated graph") {
  ExperimentConfig cfg;
  cfg.sizes = {10};
  cfg.densities = {0.4};
  cfg.runs_per_cell = 1;
  cfg.solvers = {"exact"};
  cfg.base_seed = 9;
  const auto records = run_experiment(cfg);
  REQUIRE(records.size() == 1);
  const Graph g = gen_random_graph(10, 0.4, records[0].seed);
  CHECK(records[0].cover_size == brute_min_cover_size(10, g.edges()));
}

TEST_CASE("exact solver only joins cells under the size cap") {
  ExperimentConfig cfg = tiny_config();
  cfg.sizes = {10, 40};
  cfg.solvers = {"exact"};
  cfg.exact_size_cap = 30;
  const auto records = run_experiment(cfg);
  for (const auto& r : records) CHECK(r.n == 10);
  CHECK(records.size() == 2);
}

TEST_CASE("CSV output is deterministic for a fixed base seed") {
  const auto cfg = tiny_config();
  std::ostringstream a, b;
  write_csv(a, run_experiment(cfg));
  write_csv(b, run_experiment(cfg));
  CHECK(a.str() == b.str());
  CHECK(a.str().find(
            "n,density,solver,pop_mult,crossover,mutation,run,seed,"
            "cover_size,cover_ratio_pct,critical_count,generations,"
            "elapsed_ms") != std::string::npos);
  // timing off by default: elapsed column is all zeros
  std::istringstream lines(a.str());
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 'n') continue;
    CHECK(line.substr(line.rfind(',') + 1) == "0.000");
  }
}

TEST_CASE("improvement_summary arithmetic") {
  std::vector<ExperimentRecord> records;
  const auto add = [&](const std::string& solver, int run, double ratio) {
    ExperimentRecord r;
    r.n = 10;
    r.density = 0.3;
    r.solver = solver;
    r.run = run;
    r.cover_ratio_pct = ratio;
    if (solver == "hybrid-ga") {
      r.has_ga_params = true;
      r.ga = {1.0, 0.5, 0.5};
    }
    records.push_back(r);
  };

  SUBCASE("identical covers mean zero improvement") {
    add("2approx", 0, 60.0);
    add("hybrid-ga", 0, 60.0);
    const auto cells = improvement_summary(records);
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].improvement_pct_points == doctest::Approx(0.0));
  }

  SUBCASE("ten points better on one run") {
    add("2approx", 0, 60.0);
    add("hybrid-ga", 0, 50.0);
    const auto cells = improvement_summary(records);
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].improvement_pct_points == doctest::Approx(10.0));
    CHECK(cells[0].pairs == 1);
  }

  SUBCASE("averages over runs") {
    add("2approx", 0, 60.0);
    add("hybrid-ga", 0, 50.0);
    add("2approx", 1, 70.0);
    add("hybrid-ga", 1, 64.0);
    const auto cells = improvement_summary(records);
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].improvement_pct_points == doctest::Approx(8.0));
    CHECK(cells[0].pairs == 2);
  }

  SUBCASE("missing 2approx rows are an error") {
    add("hybrid-ga", 0, 50.0);
    CHECK_THROWS_AS(improvement_summary(records), std::runtime_error);
  }

  SUBCASE("missing hybrid-ga rows are an error") {
    add("2approx", 0, 50.0);
    CHECK_THROWS_AS(improvement_summary(records), std::runtime_error);
  }
}

TEST_CASE("improvement matches an independent recomputation on a real run") {
  auto cfg = tiny_config();
  cfg.sizes = {16, 20};
  cfg.runs_per_cell = 3;
  const auto records = run_experiment(cfg);
  const auto cells = improvement_summary(records);
  REQUIRE(cells.size() == 1);

  double sum = 0.0;
  int pairs = 0;
  for (const auto& ga : records) {
    if (ga.solver != "hybrid-ga") continue;
    for (const auto& ap : records) {
      if (ap.solver == "2approx" && ap.n == ga.n && ap.run == ga.run &&
          ap.density == ga.density) {
        sum += ap.cover_ratio_pct - ga.cover_ratio_pct;
        ++pairs;
      }
    }
  }
  REQUIRE(pairs == 6);
  CHECK(cells[0].improvement_pct_points == doctest::Approx(sum / pairs));
}

TEST_CASE("critical_count_summary counts each run once") {
  ExperimentConfig cfg;
  cfg.sizes = {6, 8};
  cfg.densities = {0.0, 1.0};
  cfg.runs_per_cell = 2;
  cfg.solvers = {"2approx", "hybrid-ga"};
  cfg.ga_grid = {{1.0, 0.5, 0.5}};
  const auto cells = critical_count_summary(run_experiment(cfg));
  REQUIRE(cells.size() == 4);
  for (const auto& c : cells) {
    CHECK(c.runs == 2);
    if (c.density == 0.0) CHECK(c.mean_critical == 0.0);   // edgeless
    if (c.density == 1.0) CHECK(c.mean_critical == c.n);   // complete
  }
}

TEST_CASE("mean critical count is non-decreasing in density") {
  ExperimentConfig cfg;
  cfg.sizes = {30};
  cfg.densities = {0.3, 0.6, 0.9};
  cfg.runs_per_cell = 30;
  cfg.solvers = {"2approx"};
  cfg.base_seed = 77;
  const auto cells = critical_count_summary(run_experiment(cfg));
  REQUIRE(cells.size() == 3);
  CHECK(cells[0].mean_critical <= cells[1].mean_critical);
  CHECK(cells[1].mean_critical <= cells[2].mean_critical);
}

TEST_CASE("config validation") {
  ExperimentConfig cfg = tiny_config();
  cfg.runs_per_cell = 0;
  CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
  cfg = tiny_config();
  cfg.solvers = {"simulated-annealing"};
  CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
  cfg = tiny_config();
  cfg.solvers = {"hybrid-ga"};
  cfg.ga_grid.clear();
  CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
  cfg = tiny_config();
  cfg.densities = {1.5};
  CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
}
