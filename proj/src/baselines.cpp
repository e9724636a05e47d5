#include "phylocover/baselines.hpp"

#include <algorithm>

#include "phylocover/errors.hpp"
#include "phylocover/rng.hpp"

namespace phylocover {

std::vector<int> two_approx_cover(const Graph& g, std::uint64_t seed,
                                  EdgePick pick) {
  Rng rng(seed);
  std::vector<Edge> remaining = g.edges();
  std::vector<char> covered(static_cast<std::size_t>(g.universe()), 0);
  std::vector<int> cover;

  while (true) {
    std::erase_if(remaining, [&](const Edge& e) {
      return covered[static_cast<std::size_t>(e.first)] ||
             covered[static_cast<std::size_t>(e.second)];
    });
    if (remaining.empty()) break;
    const std::size_t idx =
        pick == EdgePick::First ? 0 : rng.index(remaining.size());
    const auto [u, v] = remaining[idx];
    covered[static_cast<std::size_t>(u)] = 1;
    covered[static_cast<std::size_t>(v)] = 1;
    cover.push_back(u);
    cover.push_back(v);
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

bool is_vertex_cover(const Graph& g, const std::vector<int>& s) {
  std::vector<char> in(static_cast<std::size_t>(g.universe()), 0);
  for (int u : s)
    if (u >= 0 && u < g.universe()) in[static_cast<std::size_t>(u)] = 1;
  for (const auto& [u, v] : g.edges())
    if (!in[static_cast<std::size_t>(u)] && !in[static_cast<std::size_t>(v)])
      return false;
  return true;
}

namespace {

class ExactSolver {
 public:
  ExactSolver(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {
    const int n = g.universe();
    gone_.assign(static_cast<std::size_t>(n), 0);
    deg_.assign(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u) {
      if (g.contains(u)) deg_[static_cast<std::size_t>(u)] = g.degree(u);
      else gone_[static_cast<std::size_t>(u)] = 1;
    }
  }

  std::vector<int> solve() {
    best_ = greedy_cover();
    search();
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void remove(int u) {
    for (int w : g_.neighbors(u))
      if (!gone_[static_cast<std::size_t>(w)]) --deg_[static_cast<std::size_t>(w)];
    gone_[static_cast<std::size_t>(u)] = 1;
  }

  void restore(int u) {
    gone_[static_cast<std::size_t>(u)] = 0;
    int d = 0;
    for (int w : g_.neighbors(u)) {
      if (!gone_[static_cast<std::size_t>(w)]) {
        ++deg_[static_cast<std::size_t>(w)];
        ++d;
      }
    }
    deg_[static_cast<std::size_t>(u)] = d;
  }

  // Max-degree greedy; only used for the initial upper bound.
  std::vector<int> greedy_cover() const {
    auto deg = deg_;
    auto gone = gone_;
    std::vector<int> cover;
    while (true) {
      int v = -1;
      for (int u = 0; u < g_.universe(); ++u)
        if (!gone[static_cast<std::size_t>(u)] &&
            (v == -1 || deg[static_cast<std::size_t>(u)] >
                            deg[static_cast<std::size_t>(v)]))
          v = u;
      if (v == -1 || deg[static_cast<std::size_t>(v)] == 0) break;
      cover.push_back(v);
      for (int w : g_.neighbors(v))
        if (!gone[static_cast<std::size_t>(w)]) --deg[static_cast<std::size_t>(w)];
      gone[static_cast<std::size_t>(v)] = 1;
    }
    return cover;
  }

  // Greedy maximal matching size; any cover needs one vertex per match.
  std::size_t matching_lower_bound() const {
    std::vector<char> matched(static_cast<std::size_t>(g_.universe()), 0);
    std::size_t size = 0;
    for (int u = 0; u < g_.universe(); ++u) {
      if (gone_[static_cast<std::size_t>(u)] ||
          matched[static_cast<std::size_t>(u)])
        continue;
      for (int w : g_.neighbors(u)) {
        if (!gone_[static_cast<std::size_t>(w)] &&
            !matched[static_cast<std::size_t>(w)]) {
          matched[static_cast<std::size_t>(u)] = 1;
          matched[static_cast<std::size_t>(w)] = 1;
          ++size;
          break;
        }
      }
    }
    return size;
  }

  // Exact minimum cover of a residual whose degrees are all <= 2
  // (disjoint paths and cycles), appended to `out`.
  void cover_low_degree(std::vector<int>& out) const {
    std::vector<char> seen(static_cast<std::size_t>(g_.universe()), 0);
    const auto next_of = [&](int cur, int prev) {
      for (int w : g_.neighbors(cur))
        if (!gone_[static_cast<std::size_t>(w)] && w != prev) return w;
      return -1;
    };
    // Paths first: walk from each endpoint, take every other vertex
    // starting with the endpoint's neighbor.
    for (int u = 0; u < g_.universe(); ++u) {
      if (gone_[static_cast<std::size_t>(u)] ||
          seen[static_cast<std::size_t>(u)] ||
          deg_[static_cast<std::size_t>(u)] != 1)
        continue;
      seen[static_cast<std::size_t>(u)] = 1;
      int prev = u, cur = next_of(u, -1), step = 1;
      while (cur != -1) {
        seen[static_cast<std::size_t>(cur)] = 1;
        if (step % 2 == 1) out.push_back(cur);
        const int nxt = next_of(cur, prev);
        prev = cur;
        cur = nxt;
        ++step;
      }
    }
    // Remaining unseen vertices with edges are cycles.
    for (int u = 0; u < g_.universe(); ++u) {
      if (gone_[static_cast<std::size_t>(u)] ||
          seen[static_cast<std::size_t>(u)] ||
          deg_[static_cast<std::size_t>(u)] != 2)
        continue;
      std::size_t len = 0;
      int prev = u, cur = next_of(u, -1);
      seen[static_cast<std::size_t>(u)] = 1;
      ++len;
      while (cur != u) {
        seen[static_cast<std::size_t>(cur)] = 1;
        if (len % 2 == 1) out.push_back(cur);
        const int nxt = next_of(cur, prev);
        prev = cur;
        cur = nxt;
        ++len;
      }
      if (len % 2 == 1) out.push_back(prev);  // odd cycle needs one more
    }
  }

  void search() {
    if (++nodes_ > budget_) throw BudgetExceededError(budget_);
    if (cur_.size() >= best_.size()) return;
    if (cur_.size() + matching_lower_bound() >= best_.size()) return;

    int v = -1;
    for (int u = 0; u < g_.universe(); ++u)
      if (!gone_[static_cast<std::size_t>(u)] &&
          (v == -1 ||
           deg_[static_cast<std::size_t>(u)] > deg_[static_cast<std::size_t>(v)]))
        v = u;
    if (v == -1 || deg_[static_cast<std::size_t>(v)] == 0) {
      best_ = cur_;  // edgeless residual, cur_ is a full cover
      return;
    }
    if (deg_[static_cast<std::size_t>(v)] <= 2) {
      std::vector<int> candidate = cur_;
      cover_low_degree(candidate);
      if (candidate.size() < best_.size()) best_ = candidate;
      return;
    }

    // Branch 1: v joins the cover.
    cur_.push_back(v);
    remove(v);
    search();
    restore(v);
    cur_.pop_back();

    // Branch 2: v stays out, so all of its neighbors join.
    std::vector<int> taken;
    for (int w : g_.neighbors(v))
      if (!gone_[static_cast<std::size_t>(w)]) taken.push_back(w);
    for (int w : taken) {
      cur_.push_back(w);
      remove(w);
    }
    search();
    for (auto it = taken.rbegin(); it != taken.rend(); ++it) {
      restore(*it);
      cur_.pop_back();
    }
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<char> gone_;
  std::vector<int> deg_;
  std::vector<int> cur_;
  std::vector<int> best_;
};

}  // namespace

std::vector<int> exact_cover(const Graph& g, std::uint64_t node_budget) {
  return ExactSolver(g, node_budget).solve();
}

}  // namespace phylocover
