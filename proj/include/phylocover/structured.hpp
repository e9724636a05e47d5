#pragma once

#include <vector>

#include "phylocover/graph.hpp"

namespace phylocover {

// Minimum vertex cover of a graph that is a single tree component
// (possibly one isolated vertex). Repeatedly puts the lowest-id leaf's
// unique neighbor into the cover. std::invalid_argument if the graph is
// not one tree.
std::vector<int> tree_vertex_cover(const Graph& g);

// Minimum vertex cover, size ceil(k/2), of a single simple cycle of
// length k >= 3: walk from the lowest id towards its lower-id neighbor
// taking every other vertex. std::invalid_argument if not one cycle.
std::vector<int> cycle_vertex_cover(const Graph& g);

// Union of per-component optimal covers; every component must be a tree
// or a simple cycle (std::invalid_argument otherwise).
std::vector<int> cover_special_graph(const Graph& g);

namespace detail {

// cover_special_graph over the graph with dead[id] != 0 masked out.
// dead may be empty. Used by the chromosome decoder on residual graphs.
std::vector<int> cover_components_masked(const Graph& g,
                                         const std::vector<char>& dead);

}  // namespace detail

}  // namespace phylocover
