#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "phylocover/ga.hpp"

namespace phylocover {

// One point of the GA parameter grid exercised by the bench.
struct GaGridPoint {
  double pop_mult = 1.0;
  double crossover = 0.5;
  double mutation = 0.5;
};

struct ExperimentConfig {
  std::vector<int> sizes{50, 100, 150, 200, 250};
  std::vector<double> densities{0.3, 0.6, 0.9};
  int runs_per_cell = 10;
  // Executed per run in this order; "exact" only joins cells with
  // n <= exact_size_cap.
  std::vector<std::string> solvers{"2approx", "hybrid-ga"};
  std::vector<GaGridPoint> ga_grid{
      {1.0, 0.3, 0.5}, {1.0, 0.3, 0.8}, {1.0, 0.5, 0.5}, {1.0, 0.5, 0.8}};
  int stall_generations = 10;
  int max_generations = 1000;
  int exact_size_cap = 30;
  std::uint64_t base_seed = 0;
  // Wall-clock timing is opt-in: with it off elapsed_ms is written as 0 so
  // repeated runs with one seed produce byte-identical CSV.
  bool measure_time = false;
};

struct ExperimentRecord {
  int n = 0;
  double density = 0.0;
  std::string solver;
  bool has_ga_params = false;
  GaGridPoint ga;
  int run = 0;
  std::uint64_t seed = 0;  // the run's graph seed, shared by all solvers
  int cover_size = 0;
  double cover_ratio_pct = 0.0;
  int critical_count = 0;
  int generations = 0;
  double elapsed_ms = 0.0;
};

// Runs every (size x density x run x solver[x grid]) cell. The graph of a
// run is derived from (base_seed, n, density, run) so each solver sees the
// identical graph; records come back sorted by (n, density, solver,
// ga params, run).
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg);

// Columns: n,density,solver,pop_mult,crossover,mutation,run,seed,
// cover_size,cover_ratio_pct,critical_count,generations,elapsed_ms.
// Two '#' comment lines describing the design precede the header row.
void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);

struct ImprovementCell {
  double density = 0.0;
  GaGridPoint ga;
  double improvement_pct_points = 0.0;  // mean(2approx %) - mean(GA %)
  int pairs = 0;
};

// Mean percentage-point improvement of the GA over the 2-approximation,
// per (density, ga params), paired by run seed. Throws std::runtime_error
// when a GA row has no matching 2approx row (or no GA rows exist).
std::vector<ImprovementCell> improvement_summary(
    const std::vector<ExperimentRecord>& records);

struct CriticalCell {
  int n = 0;
  double density = 0.0;
  double mean_critical = 0.0;
  int runs = 0;
};

// Mean critical-vertex count per (n, density); each run counted once no
// matter how many solvers saw its graph.
std::vector<CriticalCell> critical_count_summary(
    const std::vector<ExperimentRecord>& records);

void print_improvement_summary(std::ostream& out,
                               const std::vector<ImprovementCell>& cells);
void print_critical_summary(std::ostream& out,
                            const std::vector<CriticalCell>& cells);

}  // namespace phylocover
