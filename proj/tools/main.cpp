#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "phylocover/baselines.hpp"
#include "phylocover/bench.hpp"
#include "phylocover/errors.hpp"
#include "phylocover/ga.hpp"
#include "phylocover/graph.hpp"
#include "phylocover/phylogeny.hpp"
#include "phylocover/structured.hpp"

namespace {

using namespace phylocover;

// PHYLOCOVER_SEED supplies the default for every --seed flag; the flags
// still override it.
std::uint64_t env_default_seed() {
  const char* s = std::getenv("PHYLOCOVER_SEED");
  if (s == nullptr || *s == '\0') return 0;
  return std::strtoull(s, nullptr, 10);
}

std::string fmt(double v, const char* spec = "%.10g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

Graph read_graph_input(const std::string& path) {
  if (path == "-") return read_edge_list(std::cin);
  return load_edge_list(path);
}

BinaryCharacterMatrix read_matrix_input(const std::string& path) {
  if (path == "-") return read_matrix(std::cin);
  return load_matrix(path);
}

void print_ids(std::ostream& out, const char* label,
               const std::vector<int>& ids) {
  out << label;
  for (int v : ids) out << ' ' << v;
  out << '\n';
}

struct SolveOptions {
  std::string algo = "exact";
  std::string input = "-";
  bool matrix = false;
  std::uint64_t seed = env_default_seed();
  std::string pick = "random";
  std::uint64_t budget = kDefaultExactBudget;
  GaParams ga;
};

GaParams ga_from(const SolveOptions& opt) {
  GaParams params = opt.ga;
  params.seed = opt.seed;
  return params;
}

int run_solve(const SolveOptions& opt) {
  const Graph g = opt.matrix ? conflict_graph(read_matrix_input(opt.input))
                             : read_graph_input(opt.input);

  const auto start = std::chrono::steady_clock::now();
  std::vector<int> cover;
  int generations = -1;
  if (opt.algo == "exact") {
    cover = exact_cover(g, opt.budget);
  } else if (opt.algo == "2approx") {
    cover = two_approx_cover(
        g, opt.seed, opt.pick == "first" ? EdgePick::First : EdgePick::Random);
  } else if (opt.algo == "hybrid-ga") {
    CoverSolution sol = evolve(g, ga_from(opt));
    cover = std::move(sol.cover);
    generations = sol.generations;
  } else {
    throw std::invalid_argument("unknown --algo: " + opt.algo);
  }
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();

  print_ids(std::cout, "cover:", cover);
  std::cout << "size: " << cover.size() << '\n';
  std::cout << "fitness: " << fmt(fitness(g, cover)) << '\n';
  if (generations >= 0) std::cout << "generations: " << generations << '\n';
  // Timing stays off stdout so fixed-seed runs are byte-identical.
  std::cerr << "elapsed_ms: " << fmt(elapsed_ms, "%.3f") << '\n';
  return 0;
}

int run_check(const std::string& input) {
  const BinaryCharacterMatrix mtx = read_matrix_input(input);
  const Graph conflicts = conflict_graph(mtx);
  std::cout << "species: " << mtx.species_count() << '\n';
  std::cout << "characters: " << mtx.char_count() << '\n';
  std::cout << "compatible: " << (conflicts.edge_count() == 0 ? "yes" : "no")
            << '\n';
  std::cout << "conflicts: " << conflicts.edge_count() << '\n';
  std::cout << "critical vertices: " << critical_vertices(conflicts).size()
            << '\n';
  return 0;
}

int run_filter(const SolveOptions& opt) {
  const BinaryCharacterMatrix mtx = read_matrix_input(opt.input);
  const GaParams ga = ga_from(opt);
  const CompatibleSubset result =
      largest_compatible_subset(mtx, opt.algo, opt.seed, &ga);
  print_ids(std::cout, "kept:", result.kept);
  print_ids(std::cout, "dropped:", result.dropped);
  if (!result.unattached.empty())
    print_ids(std::cout, "# all-zero columns kept but labeling no edge:",
              result.unattached);
  format_phylo_tree(std::cout, result.tree);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"phylocover: vertex-cover solvers and perfect-phylogeny "
               "character filtering"};
  app.require_subcommand(1);

  // --- gen ---
  auto* gen = app.add_subcommand("gen", "generate a random graph by edge density");
  int gen_n = 50;
  double gen_density = 0.3;
  std::uint64_t gen_seed = env_default_seed();
  std::string gen_out = "-";
  gen->add_option("-n,--vertices", gen_n, "vertex count")->required();
  gen->add_option("-d,--density", gen_density, "edge density in [0,1]")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("-o,--out", gen_out, "output path ('-' = stdout)");

  // --- solve ---
  SolveOptions solve_opt;
  auto* solve = app.add_subcommand("solve", "run one cover solver on a graph");
  solve->add_option("--algo", solve_opt.algo, "exact | 2approx | hybrid-ga")
      ->required();
  solve->add_option("-i,--input", solve_opt.input,
                    "edge-list path, '-' = stdin");
  solve->add_flag("--matrix", solve_opt.matrix,
                  "input is a character matrix; solve its conflict graph");
  solve->add_option("--seed", solve_opt.seed, "solver seed");
  solve->add_option("--pick", solve_opt.pick, "2approx edge pick: random | first")
      ->check(CLI::IsMember({"random", "first"}));
  solve->add_option("--budget", solve_opt.budget, "exact solver node budget");
  solve->add_option("--pop-mult", solve_opt.ga.population_multiplier,
                    "population = max(2, round(pop-mult * criticals))");
  solve->add_option("--crossover", solve_opt.ga.crossover_rate,
                    "single-point crossover rate");
  solve->add_option("--mutation", solve_opt.ga.mutation_rate, "mutation rate");
  bool per_bit = false;
  solve->add_flag("--per-bit-mutation", per_bit,
                  "mutation rate applies per bit instead of per offspring");
  solve->add_option("--stall", solve_opt.ga.stall_generations,
                    "stop after this many generations without improvement");
  solve->add_option("--max-gen", solve_opt.ga.max_generations,
                    "hard generation cap");

  // --- check ---
  auto* check = app.add_subcommand("check", "character-matrix compatibility report");
  std::string check_input = "-";
  check->add_option("-i,--input", check_input, "matrix path, '-' = stdin");

  // --- filter ---
  SolveOptions filter_opt;
  auto* filter = app.add_subcommand(
      "filter", "keep the largest compatible character subset and build its tree");
  filter->add_option("--algo", filter_opt.algo, "exact | 2approx | hybrid-ga");
  filter->add_option("-i,--input", filter_opt.input, "matrix path, '-' = stdin");
  filter->add_option("--seed", filter_opt.seed, "solver seed");
  filter->add_option("--pop-mult", filter_opt.ga.population_multiplier, "");
  filter->add_option("--crossover", filter_opt.ga.crossover_rate, "");
  filter->add_option("--mutation", filter_opt.ga.mutation_rate, "");
  filter->add_option("--stall", filter_opt.ga.stall_generations, "");
  filter->add_option("--max-gen", filter_opt.ga.max_generations, "");

  // --- bench ---
  auto* bench = app.add_subcommand("bench", "paired solver benchmark, CSV output");
  ExperimentConfig cfg;
  cfg.base_seed = env_default_seed();
  cfg.sizes = {20, 30, 40, 50, 60};  // desk scale so exact can join below the cap
  cfg.solvers = {"2approx", "hybrid-ga", "exact"};
  std::vector<std::string> ga_pairs;
  double bench_pop_mult = 1.0;
  std::string bench_out = "bench.csv";
  bench->add_option("--sizes", cfg.sizes, "graph sizes")->delimiter(',');
  bench->add_option("--densities", cfg.densities, "edge densities")
      ->delimiter(',');
  bench->add_option("--runs", cfg.runs_per_cell, "runs per cell");
  bench->add_option("--solvers", cfg.solvers, "2approx | exact | hybrid-ga")
      ->delimiter(',');
  bench->add_option("--ga-params", ga_pairs,
                    "crossover:mutation pairs, e.g. 0.5:0.5,0.3:0.8")
      ->delimiter(',');
  bench->add_option("--pop-mult", bench_pop_mult,
                    "population multiplier for every GA grid point");
  bench->add_option("--stall", cfg.stall_generations, "GA stall generations");
  bench->add_option("--max-gen", cfg.max_generations, "GA generation cap");
  bench->add_option("--exact-cap", cfg.exact_size_cap,
                    "largest n the exact solver joins");
  bench->add_option("--seed", cfg.base_seed, "base seed");
  bench->add_option("-o,--out", bench_out, "CSV path ('-' = stdout)");
  bench->add_flag("--timing", cfg.measure_time,
                  "record wall-clock elapsed_ms (makes CSV non-reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) {
      const Graph g = gen_random_graph(gen_n, gen_density, gen_seed);
      if (gen_out == "-") {
        write_edge_list(std::cout, g);
      } else {
        save_edge_list(gen_out, g);
        std::cerr << "wrote " << gen_out << " (" << g.vertex_count()
                  << " vertices, " << g.edge_count() << " edges)\n";
      }
      return 0;
    }
    if (solve->parsed()) {
      if (per_bit) solve_opt.ga.mutation_mode = MutationMode::PerBit;
      return run_solve(solve_opt);
    }
    if (check->parsed()) return run_check(check_input);
    if (filter->parsed()) return run_filter(filter_opt);
    if (bench->parsed()) {
      if (!ga_pairs.empty()) {
        cfg.ga_grid.clear();
        for (const auto& pair : ga_pairs) {
          const auto colon = pair.find(':');
          if (colon == std::string::npos)
            throw std::invalid_argument(
                "--ga-params entries must look like 0.5:0.5");
          GaGridPoint gp;
          gp.crossover = std::stod(pair.substr(0, colon));
          gp.mutation = std::stod(pair.substr(colon + 1));
          cfg.ga_grid.push_back(gp);
        }
      }
      for (auto& gp : cfg.ga_grid) gp.pop_mult = bench_pop_mult;

      const auto records = run_experiment(cfg);
      if (bench_out == "-") {
        write_csv(std::cout, records);
      } else {
        std::ofstream out(bench_out);
        if (!out) throw std::runtime_error("cannot open CSV output: " + bench_out);
        write_csv(out, records);
      }

      print_critical_summary(std::cout, critical_count_summary(records));
      bool has_ga = false, has_2a = false;
      for (const auto& r : records) {
        has_ga = has_ga || r.solver == "hybrid-ga";
        has_2a = has_2a || r.solver == "2approx";
      }
      if (has_ga && has_2a)
        print_improvement_summary(std::cout, improvement_summary(records));
      if (bench_out != "-")
        std::cerr << "wrote " << bench_out << " (" << records.size()
                  << " records)\n";
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const IncompatibleMatrixError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
