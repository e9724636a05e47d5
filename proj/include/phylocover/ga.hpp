#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "phylocover/graph.hpp"

namespace phylocover {

// Bit k corresponds to the k-th entry of critical_vertices(g).
using Chromosome = std::vector<std::uint8_t>;

enum class MutationMode {
  SingleBit,  // per offspring: with probability mutation_rate flip one
              // uniformly chosen bit
  PerBit      // every bit flips independently with probability mutation_rate
};

struct GaParams {
  // population size = max(2, round(population_multiplier * |criticals|))
  double population_multiplier = 1.0;
  double crossover_rate = 0.5;  // per pair: single-point crossover
  double mutation_rate = 0.5;
  MutationMode mutation_mode = MutationMode::SingleBit;
  int stall_generations = 10;  // stop after this many without improvement
  int max_generations = 1000;  // hard cap
  std::uint64_t seed = 0;
};

struct CoverSolution {
  std::vector<int> cover;  // ascending vertex ids
  double fitness = 0.0;    // |cover| / |V|, lower is better
  std::string solver;
  std::uint64_t seed = 0;
  int generations = 0;  // generations produced after the initial population
};

// Turns a chromosome over the critical vertices into a full vertex cover:
// criticals are processed in ascending id order (skipping ones already
// removed); a 1-bit removes the vertex into the cover; a 0-bit removes all
// of its current neighbors into the cover, isolating it. The residual
// graph then decomposes into trees and simple cycles, which are covered
// optimally. std::invalid_argument on a length mismatch.
std::vector<int> decode(const Graph& g, const Chromosome& c);

// |cover| / |V|.
double fitness(const Graph& g, const std::vector<int>& cover);

// GA over critical-vertex bitstrings: binary tournament selection,
// single-point crossover, elitist generational replacement, stall-based
// termination. Deterministic for a fixed (graph, params).
CoverSolution evolve(const Graph& g, const GaParams& params);

// Decoder bound to one graph; reuses buffers across decode calls.
class Decoder {
 public:
  explicit Decoder(const Graph& g);

  const std::vector<int>& criticals() const { return criticals_; }
  std::vector<int> decode(const Chromosome& c);

 private:
  const Graph* g_;
  std::vector<int> criticals_;
  std::vector<char> removed_;
};

}  // namespace phylocover
