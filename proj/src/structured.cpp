#include "phylocover/structured.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace phylocover {

namespace {

bool masked_out(const std::vector<char>& dead, int u) {
  return !dead.empty() && dead[static_cast<std::size_t>(u)] != 0;
}

// Leaf-peeling cover of one tree component. gone marks vertices taken
// into covers so far (shared across components); deg holds the current
// masked degrees and is maintained incrementally.
void tree_cover_into(const Graph& g, const Component& comp,
                     std::vector<char>& gone, std::vector<int>& deg,
                     std::vector<int>& cover) {
  std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
  for (int u : comp.vertices)
    if (deg[static_cast<std::size_t>(u)] == 1) leaves.push(u);

  const auto remove_vertex = [&](int v) {
    gone[static_cast<std::size_t>(v)] = 1;
    for (int w : g.neighbors(v)) {
      if (gone[static_cast<std::size_t>(w)]) continue;
      if (deg[static_cast<std::size_t>(w)] > 0 &&
          --deg[static_cast<std::size_t>(w)] == 1)
        leaves.push(w);
    }
    deg[static_cast<std::size_t>(v)] = 0;
  };

  while (!leaves.empty()) {
    const int u = leaves.top();
    leaves.pop();
    if (gone[static_cast<std::size_t>(u)] ||
        deg[static_cast<std::size_t>(u)] != 1)
      continue;  // stale entry
    int parent = -1;
    for (int w : g.neighbors(u)) {
      if (!gone[static_cast<std::size_t>(w)] &&
          deg[static_cast<std::size_t>(w)] > 0) {
        parent = w;
        break;
      }
    }
    if (parent == -1) continue;  // u became isolated meanwhile
    cover.push_back(parent);
    remove_vertex(parent);
  }
}

void cycle_cover_into(const Graph& g, const Component& comp,
                      const std::vector<char>& dead, std::vector<int>& cover) {
  const int start = comp.vertices.front();  // lowest id
  // Walk towards the lower-id neighbor first.
  int prev = start;
  int cur = -1;
  for (int w : g.neighbors(start)) {
    if (masked_out(dead, w)) continue;
    if (cur == -1 || w < cur) cur = w;
  }
  std::vector<int> order{start};
  while (cur != start) {
    order.push_back(cur);
    int next = -1;
    for (int w : g.neighbors(cur)) {
      if (masked_out(dead, w) || w == prev) continue;
      next = w;
      break;
    }
    prev = cur;
    cur = next;
  }
  const std::size_t k = order.size();
  for (std::size_t i = 1; i < k; i += 2) cover.push_back(order[i]);
  if (k % 2 == 1) cover.push_back(order[k - 1]);  // closes (last, start)
}

std::vector<int> masked_degrees(const Graph& g, const std::vector<char>& dead) {
  std::vector<int> deg(static_cast<std::size_t>(g.universe()), 0);
  for (int u = 0; u < g.universe(); ++u) {
    if (!g.contains(u) || masked_out(dead, u)) continue;
    int d = 0;
    for (int w : g.neighbors(u))
      if (!masked_out(dead, w)) ++d;
    deg[static_cast<std::size_t>(u)] = d;
  }
  return deg;
}

std::vector<int> cover_components_impl(const Graph& g,
                                       const std::vector<char>& dead) {
  const auto comps = detail::classify_components_masked(g, dead);
  auto deg = masked_degrees(g, dead);
  std::vector<char> gone(static_cast<std::size_t>(g.universe()), 0);
  std::vector<int> cover;
  for (const auto& comp : comps) {
    switch (comp.kind) {
      case ComponentKind::Tree:
        tree_cover_into(g, comp, gone, deg, cover);
        break;
      case ComponentKind::SimpleCycle:
        cycle_cover_into(g, comp, dead, cover);
        break;
      case ComponentKind::Other:
        throw std::invalid_argument(
            "cover_special_graph: component containing vertex " +
            std::to_string(comp.vertices.front()) +
            " is neither a tree nor a simple cycle");
    }
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

}  // namespace

namespace detail {

std::vector<int> cover_components_masked(const Graph& g,
                                         const std::vector<char>& dead) {
  return cover_components_impl(g, dead);
}

}  // namespace detail

std::vector<int> tree_vertex_cover(const Graph& g) {
  const auto comps = classify_components(g);
  if (comps.size() != 1 || comps.front().kind != ComponentKind::Tree)
    throw std::invalid_argument("tree_vertex_cover: graph is not one tree");
  return cover_components_impl(g, {});
}

std::vector<int> cycle_vertex_cover(const Graph& g) {
  const auto comps = classify_components(g);
  if (comps.size() != 1 || comps.front().kind != ComponentKind::SimpleCycle)
    throw std::invalid_argument(
        "cycle_vertex_cover: graph is not one simple cycle");
  return cover_components_impl(g, {});
}

std::vector<int> cover_special_graph(const Graph& g) {
  return cover_components_impl(g, {});
}

}  // namespace phylocover
