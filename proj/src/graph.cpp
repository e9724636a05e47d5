#include "phylocover/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

#include "phylocover/rng.hpp"

namespace phylocover {

const char* to_string(ComponentKind k) {
  switch (k) {
    case ComponentKind::Tree: return "tree";
    case ComponentKind::SimpleCycle: return "cycle";
    case ComponentKind::Other: return "other";
  }
  return "?";
}

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("graph: vertex count must be >= 0");
  adj_.resize(static_cast<std::size_t>(n));
  alive_.assign(static_cast<std::size_t>(n), 1);
  vertex_count_ = n;
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("graph: edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") out of range");
    if (u == v)
      throw std::invalid_argument("graph: self-loop at vertex " +
                                  std::to_string(u));
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  edge_count_ = static_cast<int>(edges.size());
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
      throw std::invalid_argument("graph: duplicate edge");
  }
}

void Graph::check_vertex(int u) const {
  if (!contains(u))
    throw std::out_of_range("graph: no vertex " + std::to_string(u));
}

bool Graph::has_edge(int u, int v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& nbrs = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::degree(int u) const {
  check_vertex(u);
  return static_cast<int>(adj_[static_cast<std::size_t>(u)].size());
}

std::span<const int> Graph::neighbors(int u) const {
  check_vertex(u);
  return adj_[static_cast<std::size_t>(u)];
}

std::vector<int> Graph::vertices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(vertex_count_));
  for (int u = 0; u < universe(); ++u)
    if (alive_[static_cast<std::size_t>(u)]) out.push_back(u);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < universe(); ++u) {
    if (!alive_[static_cast<std::size_t>(u)]) continue;
    for (int v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  }
  return out;  // already sorted: u ascending, v ascending within u
}

Graph gen_random_graph(int n, double density, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_random_graph: n must be >= 1");
  if (density < 0.0 || density > 1.0)
    throw std::invalid_argument("gen_random_graph: density must be in [0,1]");

  const std::int64_t total = static_cast<std::int64_t>(n) * (n - 1) / 2;
  std::int64_t m = std::llround(density * static_cast<double>(total));
  m = std::clamp<std::int64_t>(m, 0, total);

  // Partial Fisher-Yates over the linear pair-index space, sparse so only
  // O(m) state is touched.
  Rng rng(seed);
  std::unordered_map<std::int64_t, std::int64_t> moved;
  std::vector<std::int64_t> picks;
  picks.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    const std::int64_t j =
        i + static_cast<std::int64_t>(
                rng.next_below(static_cast<std::uint64_t>(total - i)));
    auto it = moved.find(j);
    const std::int64_t vj = (it == moved.end()) ? j : it->second;
    auto ii = moved.find(i);
    moved[j] = (ii == moved.end()) ? i : ii->second;
    picks.push_back(vj);
  }

  // Pair index k (row-major over u < v): row u starts at off[u].
  std::vector<std::int64_t> off(static_cast<std::size_t>(n) + 1, 0);
  for (int u = 0; u < n; ++u)
    off[static_cast<std::size_t>(u) + 1] =
        off[static_cast<std::size_t>(u)] + (n - 1 - u);

  std::vector<Edge> edges;
  edges.reserve(picks.size());
  for (std::int64_t k : picks) {
    const auto it = std::upper_bound(off.begin(), off.end(), k);
    const int u = static_cast<int>(it - off.begin()) - 1;
    const int v = u + 1 + static_cast<int>(k - off[static_cast<std::size_t>(u)]);
    edges.emplace_back(u, v);
  }
  std::sort(edges.begin(), edges.end());
  return Graph(n, edges);
}

std::vector<Edge> find_bridges(const Graph& g) {
  const int n = g.universe();
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), -1);
  std::vector<Edge> bridges;
  int timer = 0;

  // Iterative DFS so deep paths cannot overflow the stack.
  struct Frame {
    int u;
    int parent;
    std::size_t next;  // index into neighbors(u)
  };
  std::vector<Frame> stack;

  for (int root = 0; root < n; ++root) {
    if (!g.contains(root) || disc[static_cast<std::size_t>(root)] != -1)
      continue;
    stack.push_back({root, -1, 0});
    disc[static_cast<std::size_t>(root)] =
        low[static_cast<std::size_t>(root)] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto nbrs = g.neighbors(f.u);
      if (f.next < nbrs.size()) {
        const int w = nbrs[f.next++];
        if (disc[static_cast<std::size_t>(w)] == -1) {
          disc[static_cast<std::size_t>(w)] =
              low[static_cast<std::size_t>(w)] = timer++;
          stack.push_back({w, f.u, 0});
        } else if (w != f.parent) {
          low[static_cast<std::size_t>(f.u)] =
              std::min(low[static_cast<std::size_t>(f.u)],
                       disc[static_cast<std::size_t>(w)]);
        }
        // A parent seen again through a second edge would be a multi-edge;
        // simple graphs cannot have one, so skipping the parent once is safe.
      } else {
        const int u = f.u;
        const int parent = f.parent;
        stack.pop_back();
        if (parent != -1) {
          low[static_cast<std::size_t>(parent)] =
              std::min(low[static_cast<std::size_t>(parent)],
                       low[static_cast<std::size_t>(u)]);
          if (low[static_cast<std::size_t>(u)] >
              disc[static_cast<std::size_t>(parent)])
            bridges.emplace_back(std::min(parent, u), std::max(parent, u));
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

namespace detail {

std::vector<char> cycle_membership(const Graph& g) {
  std::vector<char> on(static_cast<std::size_t>(g.universe()), 0);
  const auto bridges = find_bridges(g);  // sorted, canonical
  for (int u = 0; u < g.universe(); ++u) {
    if (!g.contains(u)) continue;
    for (int v : g.neighbors(u)) {
      if (u >= v) continue;
      if (!std::binary_search(bridges.begin(), bridges.end(), Edge{u, v})) {
        on[static_cast<std::size_t>(u)] = 1;
        on[static_cast<std::size_t>(v)] = 1;
      }
    }
  }
  return on;
}

std::vector<Component> classify_components_masked(const Graph& g,
                                                  const std::vector<char>& dead) {
  const int n = g.universe();
  const auto is_dead = [&](int u) {
    return !dead.empty() && dead[static_cast<std::size_t>(u)] != 0;
  };
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Component> out;
  std::vector<int> queue;
  for (int root = 0; root < n; ++root) {
    if (!g.contains(root) || is_dead(root) || seen[static_cast<std::size_t>(root)])
      continue;
    Component comp;
    queue.clear();
    queue.push_back(root);
    seen[static_cast<std::size_t>(root)] = 1;
    std::size_t head = 0;
    std::int64_t degree_sum = 0;
    bool all_degree_two = true;
    while (head < queue.size()) {
      const int u = queue[head++];
      comp.vertices.push_back(u);
      int deg = 0;
      for (int w : g.neighbors(u)) {
        if (is_dead(w)) continue;
        ++deg;
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          queue.push_back(w);
        }
      }
      degree_sum += deg;
      if (deg != 2) all_degree_two = false;
    }
    std::sort(comp.vertices.begin(), comp.vertices.end());
    const std::int64_t edges = degree_sum / 2;
    const auto size = static_cast<std::int64_t>(comp.vertices.size());
    if (edges == size - 1)
      comp.kind = ComponentKind::Tree;
    else if (all_degree_two)
      comp.kind = ComponentKind::SimpleCycle;
    else
      comp.kind = ComponentKind::Other;
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace detail

bool on_cycle(const Graph& g, int u) {
  if (!g.contains(u))
    throw std::out_of_range("on_cycle: no vertex " + std::to_string(u));
  return detail::cycle_membership(g)[static_cast<std::size_t>(u)] != 0;
}

std::vector<int> critical_vertices(const Graph& g) {
  const auto on = detail::cycle_membership(g);
  std::vector<int> out;
  for (int u = 0; u < g.universe(); ++u)
    if (g.contains(u) && g.degree(u) > 2 && on[static_cast<std::size_t>(u)])
      out.push_back(u);
  return out;
}

Graph remove_vertices(const Graph& g, const std::vector<int>& s) {
  Graph out;
  out.adj_.resize(static_cast<std::size_t>(g.universe()));
  out.alive_ = g.alive_;
  for (int u : s) {
    if (u < 0 || u >= g.universe())
      throw std::out_of_range("remove_vertices: no vertex " + std::to_string(u));
    out.alive_[static_cast<std::size_t>(u)] = 0;
  }
  int vertices = 0;
  int edges = 0;
  for (int u = 0; u < g.universe(); ++u) {
    if (!out.alive_[static_cast<std::size_t>(u)]) continue;
    ++vertices;
    if (!g.contains(u)) continue;  // cannot happen: alive_ only shrinks
    auto& nbrs = out.adj_[static_cast<std::size_t>(u)];
    for (int w : g.neighbors(u)) {
      if (out.alive_[static_cast<std::size_t>(w)]) {
        nbrs.push_back(w);
        if (u < w) ++edges;
      }
    }
  }
  out.vertex_count_ = vertices;
  out.edge_count_ = edges;
  return out;
}

std::vector<Component> classify_components(const Graph& g) {
  return detail::classify_components_masked(g, {});
}

}  // namespace phylocover
