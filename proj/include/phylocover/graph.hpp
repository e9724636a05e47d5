#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace phylocover {

// Undirected edge, canonical form first < second.
using Edge = std::pair<int, int>;

enum class ComponentKind { Tree, SimpleCycle, Other };

const char* to_string(ComponentKind k);

struct Component {
  std::vector<int> vertices;  // ascending
  ComponentKind kind = ComponentKind::Tree;
};

// Simple undirected graph over integer vertex ids. No self-loops, no
// duplicate edges. Ids are stable under vertex removal: remove_vertices
// keeps the original id space and only drops vertices from it, so covers
// computed on a residual graph can be unioned with ids from the original.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);                         // n isolated vertices
  Graph(int n, const std::vector<Edge>& edges);  // std::invalid_argument on a bad edge

  // Bound of the id space (the n the graph was built with).
  int universe() const { return static_cast<int>(adj_.size()); }
  // Number of vertices currently present.
  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return edge_count_; }

  bool contains(int u) const {
    return u >= 0 && u < universe() && alive_[static_cast<std::size_t>(u)];
  }
  bool has_edge(int u, int v) const;
  int degree(int u) const;  // std::out_of_range if u is absent
  std::span<const int> neighbors(int u) const;  // ascending
  std::vector<int> vertices() const;            // ascending
  std::vector<Edge> edges() const;              // canonical, sorted

 private:
  void check_vertex(int u) const;

  friend Graph remove_vertices(const Graph& g, const std::vector<int>& s);

  std::vector<std::vector<int>> adj_;
  std::vector<char> alive_;
  int vertex_count_ = 0;
  int edge_count_ = 0;
};

// Erdos-Renyi G(n, m) with m = round(density * n*(n-1)/2) edges drawn
// uniformly without replacement. Identical (n, density, seed) gives a
// bit-identical graph.
Graph gen_random_graph(int n, double density, std::uint64_t seed);

// Edges whose removal increases the number of connected components.
std::vector<Edge> find_bridges(const Graph& g);

// True iff u lies on at least one cycle, i.e. u has an incident
// non-bridge edge.
bool on_cycle(const Graph& g, int u);

// Vertices with degree > 2 that lie on a cycle, ascending. The order
// fixes the chromosome bit positions used by the GA.
std::vector<int> critical_vertices(const Graph& g);

// Induced subgraph on the present vertices minus s. Ids outside the
// universe raise std::out_of_range; already-absent ids are ignored.
Graph remove_vertices(const Graph& g, const std::vector<int>& s);

// Connected components tagged Tree / SimpleCycle / Other. An isolated
// vertex is a (trivial) Tree. Ordered by smallest contained id.
std::vector<Component> classify_components(const Graph& g);

namespace detail {

// classify_components as if every vertex with dead[id] != 0 were removed.
// dead may be empty (nothing masked) or sized to g.universe().
std::vector<Component> classify_components_masked(const Graph& g,
                                                  const std::vector<char>& dead);

// flags[u] = 1 iff u has an incident non-bridge edge.
std::vector<char> cycle_membership(const Graph& g);

}  // namespace detail

// Edge-list text format. Line 1: "n m"; then m lines "u v" (written with
// u < v and sorted; either order accepted on read). '#' starts a comment
// line; blank lines are ignored. write(read(text)) reproduces a canonical
// file byte-for-byte.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);
Graph load_edge_list(const std::string& path);
void save_edge_list(const std::string& path, const Graph& g);

}  // namespace phylocover
