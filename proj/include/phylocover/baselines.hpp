#pragma once

#include <cstdint>
#include <vector>

#include "phylocover/graph.hpp"

namespace phylocover {

// How two_approx_cover picks its next edge. Random draws uniformly from
// the remaining edges under the seed; First always takes the lowest
// remaining edge in canonical order (deterministic, seed ignored).
enum class EdgePick { Random, First };

// Classic matching-based 2-approximation: repeatedly take both endpoints
// of a remaining edge and delete everything they touch. Cover size is at
// most twice the optimum.
std::vector<int> two_approx_cover(const Graph& g, std::uint64_t seed,
                                  EdgePick pick = EdgePick::Random);

inline constexpr std::uint64_t kDefaultExactBudget = 20'000'000;

// Minimum vertex cover by branch and bound: branch on a max-degree vertex
// (it joins the cover, or all of its neighbors do), prune with a greedy
// matching lower bound, solve degree<=2 residuals directly. Throws
// BudgetExceededError once `node_budget` search nodes are spent rather
// than ever returning a non-optimal answer. Intended for small graphs
// (n up to ~30 or few edges).
std::vector<int> exact_cover(const Graph& g,
                             std::uint64_t node_budget = kDefaultExactBudget);

// True iff every edge of g has at least one endpoint in s.
bool is_vertex_cover(const Graph& g, const std::vector<int>& s);

}  // namespace phylocover
