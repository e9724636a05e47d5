#include "phylocover/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "phylocover/baselines.hpp"
#include "phylocover/rng.hpp"

namespace phylocover {

namespace {

std::uint64_t density_key(double d) {
  return static_cast<std::uint64_t>(std::llround(d * 1e9));
}

std::string fmt(double v, const char* spec = "%.10g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.sizes.empty() || cfg.densities.empty() || cfg.solvers.empty())
    throw std::invalid_argument("bench: sizes, densities and solvers must be non-empty");
  if (cfg.runs_per_cell < 1)
    throw std::invalid_argument("bench: runs_per_cell must be >= 1");
  for (int n : cfg.sizes)
    if (n < 1) throw std::invalid_argument("bench: sizes must be >= 1");
  for (double d : cfg.densities)
    if (d < 0.0 || d > 1.0)
      throw std::invalid_argument("bench: densities must be in [0,1]");
  for (const auto& s : cfg.solvers) {
    if (s != "2approx" && s != "exact" && s != "hybrid-ga")
      throw std::invalid_argument("bench: unknown solver: " + s);
    if (s == "hybrid-ga" && cfg.ga_grid.empty())
      throw std::invalid_argument("bench: hybrid-ga requires a non-empty ga_grid");
  }
}

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

}  // namespace

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  std::vector<ExperimentRecord> records;

  for (int n : cfg.sizes) {
    for (double density : cfg.densities) {
      for (int run = 0; run < cfg.runs_per_cell; ++run) {
        const std::uint64_t graph_seed =
            mix_seed({cfg.base_seed, static_cast<std::uint64_t>(n),
                      density_key(density), static_cast<std::uint64_t>(run)});
        const Graph g = gen_random_graph(n, density, graph_seed);
        const int critical_count =
            static_cast<int>(critical_vertices(g).size());

        ExperimentRecord base;
        base.n = n;
        base.density = density;
        base.run = run;
        base.seed = graph_seed;
        base.critical_count = critical_count;

        for (std::size_t si = 0; si < cfg.solvers.size(); ++si) {
          const std::string& solver = cfg.solvers[si];
          if (solver == "exact" && n > cfg.exact_size_cap) continue;

          if (solver == "hybrid-ga") {
            for (std::size_t gi = 0; gi < cfg.ga_grid.size(); ++gi) {
              const GaGridPoint& gp = cfg.ga_grid[gi];
              GaParams params;
              params.population_multiplier = gp.pop_mult;
              params.crossover_rate = gp.crossover;
              params.mutation_rate = gp.mutation;
              params.stall_generations = cfg.stall_generations;
              params.max_generations = cfg.max_generations;
              params.seed = mix_seed({graph_seed, si + 1, gi + 1});

              ExperimentRecord rec = base;
              rec.solver = solver;
              rec.has_ga_params = true;
              rec.ga = gp;
              const Timer timer;
              const CoverSolution sol = evolve(g, params);
              if (cfg.measure_time) rec.elapsed_ms = timer.ms();
              rec.cover_size = static_cast<int>(sol.cover.size());
              rec.generations = sol.generations;
              rec.cover_ratio_pct = 100.0 * rec.cover_size / n;
              records.push_back(std::move(rec));
            }
            continue;
          }

          ExperimentRecord rec = base;
          rec.solver = solver;
          const Timer timer;
          std::vector<int> cover;
          if (solver == "2approx") {
            cover = two_approx_cover(g, mix_seed({graph_seed, si + 1, 0}));
          } else {  // exact
            cover = exact_cover(g);
          }
          if (cfg.measure_time) rec.elapsed_ms = timer.ms();
          rec.cover_size = static_cast<int>(cover.size());
          rec.cover_ratio_pct = 100.0 * rec.cover_size / n;
          records.push_back(std::move(rec));
        }
      }
    }
  }

  std::sort(records.begin(), records.end(),
            [](const ExperimentRecord& a, const ExperimentRecord& b) {
              return std::tie(a.n, a.density, a.solver, a.ga.pop_mult,
                              a.ga.crossover, a.ga.mutation, a.run) <
                     std::tie(b.n, b.density, b.solver, b.ga.pop_mult,
                              b.ga.crossover, b.ga.mutation, b.run);
            });
  return records;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
  out << "# graphs are regenerated per run from (base_seed, n, density, run); "
         "all solvers of a run share its graph and its seed column\n";
  out << "# elapsed_ms is 0 unless timing was enabled; timings are for "
         "relative trends only\n";
  out << "n,density,solver,pop_mult,crossover,mutation,run,seed,cover_size,"
         "cover_ratio_pct,critical_count,generations,elapsed_ms\n";
  for (const auto& r : records) {
    out << r.n << ',' << fmt(r.density) << ',' << r.solver << ',';
    if (r.has_ga_params)
      out << fmt(r.ga.pop_mult) << ',' << fmt(r.ga.crossover) << ','
          << fmt(r.ga.mutation);
    else
      out << ",,";
    out << ',' << r.run << ',' << r.seed << ',' << r.cover_size << ','
        << fmt(r.cover_ratio_pct) << ',' << r.critical_count << ','
        << r.generations << ',' << fmt(r.elapsed_ms, "%.3f") << '\n';
  }
}

std::vector<ImprovementCell> improvement_summary(
    const std::vector<ExperimentRecord>& records) {
  // (n, density key, run) -> 2approx ratio
  std::map<std::tuple<int, std::uint64_t, int>, double> approx;
  for (const auto& r : records)
    if (r.solver == "2approx")
      approx[{r.n, density_key(r.density), r.run}] = r.cover_ratio_pct;

  struct Acc {
    double sum = 0.0;
    int pairs = 0;
  };
  std::map<std::tuple<std::uint64_t, double, double, double>, Acc> cells;
  bool any_ga = false;
  for (const auto& r : records) {
    if (r.solver != "hybrid-ga") continue;
    any_ga = true;
    const auto it = approx.find({r.n, density_key(r.density), r.run});
    if (it == approx.end())
      throw std::runtime_error(
          "improvement_summary: no 2approx row paired with hybrid-ga run " +
          std::to_string(r.run) + " (n=" + std::to_string(r.n) + ")");
    auto& acc = cells[{density_key(r.density), r.ga.pop_mult, r.ga.crossover,
                       r.ga.mutation}];
    acc.sum += it->second - r.cover_ratio_pct;
    ++acc.pairs;
  }
  if (!any_ga)
    throw std::runtime_error("improvement_summary: no hybrid-ga rows");

  std::vector<ImprovementCell> out;
  for (const auto& [key, acc] : cells) {
    ImprovementCell cell;
    cell.density = static_cast<double>(std::get<0>(key)) / 1e9;
    cell.ga = {std::get<1>(key), std::get<2>(key), std::get<3>(key)};
    cell.improvement_pct_points = acc.sum / acc.pairs;
    cell.pairs = acc.pairs;
    out.push_back(cell);
  }
  return out;
}

std::vector<CriticalCell> critical_count_summary(
    const std::vector<ExperimentRecord>& records) {
  // Count each run's graph once even when several solvers saw it.
  std::map<std::tuple<int, std::uint64_t, int>, int> per_run;
  for (const auto& r : records)
    per_run[{r.n, density_key(r.density), r.run}] = r.critical_count;

  std::map<std::pair<int, std::uint64_t>, std::pair<double, int>> cells;
  for (const auto& [key, crit] : per_run) {
    auto& [sum, count] = cells[{std::get<0>(key), std::get<1>(key)}];
    sum += crit;
    ++count;
  }

  std::vector<CriticalCell> out;
  for (const auto& [key, acc] : cells) {
    CriticalCell cell;
    cell.n = key.first;
    cell.density = static_cast<double>(key.second) / 1e9;
    cell.mean_critical = acc.first / acc.second;
    cell.runs = acc.second;
    out.push_back(cell);
  }
  std::sort(out.begin(), out.end(), [](const CriticalCell& a, const CriticalCell& b) {
    return std::tie(a.n, a.density) < std::tie(b.n, b.density);
  });
  return out;
}

void print_improvement_summary(std::ostream& out,
                               const std::vector<ImprovementCell>& cells) {
  out << "# improvement = mean(2approx cover_ratio_pct) - mean(hybrid-ga "
         "cover_ratio_pct), percentage points, paired by run\n";
  out << "density pop_mult crossover mutation improvement pairs\n";
  for (const auto& c : cells)
    out << fmt(c.density) << ' ' << fmt(c.ga.pop_mult) << ' '
        << fmt(c.ga.crossover) << ' ' << fmt(c.ga.mutation) << ' '
        << fmt(c.improvement_pct_points, "%.4f") << ' ' << c.pairs << '\n';
}

void print_critical_summary(std::ostream& out,
                            const std::vector<CriticalCell>& cells) {
  out << "# mean critical vertices per (n, density)\n";
  out << "n density mean_critical runs\n";
  for (const auto& c : cells)
    out << c.n << ' ' << fmt(c.density) << ' ' << fmt(c.mean_critical, "%.4f")
        << ' ' << c.runs << '\n';
}

}  // namespace phylocover
