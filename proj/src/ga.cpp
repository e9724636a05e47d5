#include "phylocover/ga.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "phylocover/rng.hpp"
#include "phylocover/structured.hpp"

namespace phylocover {

Decoder::Decoder(const Graph& g)
    : g_(&g), criticals_(critical_vertices(g)) {
  removed_.assign(static_cast<std::size_t>(g.universe()), 0);
}

std::vector<int> Decoder::decode(const Chromosome& c) {
  if (c.size() != criticals_.size())
    throw std::invalid_argument(
        "decode: chromosome length " + std::to_string(c.size()) +
        " does not match critical vertex count " +
        std::to_string(criticals_.size()));

  std::fill(removed_.begin(), removed_.end(), 0);
  std::vector<int> cover;

  for (std::size_t k = 0; k < criticals_.size(); ++k) {
    const int u = criticals_[k];
    if (removed_[static_cast<std::size_t>(u)]) continue;
    if (c[k]) {
      removed_[static_cast<std::size_t>(u)] = 1;
      cover.push_back(u);
    } else {
      // u stays out; every surviving neighbor must cover u's edges.
      for (int w : g_->neighbors(u)) {
        if (!removed_[static_cast<std::size_t>(w)]) {
          removed_[static_cast<std::size_t>(w)] = 1;
          cover.push_back(w);
        }
      }
    }
  }

  // Residual components are trees and simple cycles by construction.
  auto rest = detail::cover_components_masked(*g_, removed_);
  cover.insert(cover.end(), rest.begin(), rest.end());
  std::sort(cover.begin(), cover.end());
  return cover;
}

std::vector<int> decode(const Graph& g, const Chromosome& c) {
  Decoder dec(g);
  return dec.decode(c);
}

double fitness(const Graph& g, const std::vector<int>& cover) {
  if (g.vertex_count() == 0) return 0.0;
  return static_cast<double>(cover.size()) /
         static_cast<double>(g.vertex_count());
}

namespace {

void validate(const GaParams& p) {
  if (p.population_multiplier <= 0.0)
    throw std::invalid_argument("ga: population_multiplier must be > 0");
  if (p.crossover_rate < 0.0 || p.crossover_rate > 1.0)
    throw std::invalid_argument("ga: crossover_rate must be in [0,1]");
  if (p.mutation_rate < 0.0 || p.mutation_rate > 1.0)
    throw std::invalid_argument("ga: mutation_rate must be in [0,1]");
  if (p.stall_generations < 1)
    throw std::invalid_argument("ga: stall_generations must be >= 1");
  if (p.max_generations < 1)
    throw std::invalid_argument("ga: max_generations must be >= 1");
}

void mutate(Chromosome& c, const GaParams& p, Rng& rng) {
  if (c.empty()) return;
  if (p.mutation_mode == MutationMode::SingleBit) {
    if (rng.chance(p.mutation_rate)) {
      const std::size_t k = rng.index(c.size());
      c[k] ^= 1;
    }
  } else {
    for (auto& bit : c)
      if (rng.chance(p.mutation_rate)) bit ^= 1;
  }
}

}  // namespace

CoverSolution evolve(const Graph& g, const GaParams& params) {
  validate(params);

  Decoder dec(g);
  const auto len = dec.criticals().size();

  CoverSolution out;
  out.solver = "hybrid-ga";
  out.seed = params.seed;

  if (len == 0) {
    // Nothing to search: the structured solvers are already exact here.
    out.cover = dec.decode({});
    out.fitness = fitness(g, out.cover);
    out.generations = 0;
    return out;
  }

  Rng rng(params.seed);
  const int pop_size = std::max(
      2, static_cast<int>(
             std::llround(params.population_multiplier *
                          static_cast<double>(len))));

  std::vector<Chromosome> pop(static_cast<std::size_t>(pop_size));
  for (auto& c : pop) {
    c.resize(len);
    for (auto& bit : c) bit = rng.next_bit() ? 1 : 0;
  }

  std::vector<std::vector<int>> covers(pop.size());
  std::vector<std::size_t> sizes(pop.size());
  std::size_t best_idx = 0;
  const auto evaluate = [&]() {
    for (std::size_t i = 0; i < pop.size(); ++i) {
      covers[i] = dec.decode(pop[i]);
      sizes[i] = covers[i].size();
    }
    best_idx = 0;
    for (std::size_t i = 1; i < pop.size(); ++i)
      if (sizes[i] < sizes[best_idx]) best_idx = i;
  };

  evaluate();
  std::vector<int> best_cover = covers[best_idx];
  Chromosome best_bits = pop[best_idx];
  std::size_t best_size = sizes[best_idx];

  const auto tournament = [&]() {
    const std::size_t a = rng.index(pop.size());
    const std::size_t b = rng.index(pop.size());
    return sizes[a] <= sizes[b] ? a : b;
  };

  int generation = 0;
  int stall = 0;
  while (generation < params.max_generations &&
         stall < params.stall_generations) {
    std::vector<Chromosome> next;
    next.reserve(pop.size());
    next.push_back(best_bits);  // 1-elitism
    while (next.size() < pop.size()) {
      Chromosome child_a = pop[tournament()];
      Chromosome child_b = pop[tournament()];
      if (rng.chance(params.crossover_rate) && len >= 2) {
        const std::size_t cut = 1 + rng.index(len - 1);
        for (std::size_t k = cut; k < len; ++k)
          std::swap(child_a[k], child_b[k]);
      }
      mutate(child_a, params, rng);
      mutate(child_b, params, rng);
      next.push_back(std::move(child_a));
      next.push_back(std::move(child_b));
    }
    next.resize(pop.size());
    pop = std::move(next);
    evaluate();
    ++generation;

    if (sizes[best_idx] < best_size) {
      best_size = sizes[best_idx];
      best_cover = covers[best_idx];
      best_bits = pop[best_idx];
      stall = 0;
    } else {
      ++stall;
    }
  }

  out.cover = std::move(best_cover);
  out.fitness = fitness(g, out.cover);
  out.generations = generation;
  return out;
}

}  // namespace phylocover
