#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "copthrottle/errors.hpp"
#include "copthrottle/graph.hpp"

namespace copthrottle {

namespace detail {

inline constexpr int kNoPath = -1;

/// Multi-source BFS with -1 for unreachable vertices. Internal fast path.
inline std::vector<int> bfs(const Graph& g, std::span<const Vertex> sources) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), kNoPath);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    if (dist[static_cast<std::size_t>(s)] == 0) continue;
    dist[static_cast<std::size_t>(s)] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] == kNoPath) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

inline std::vector<int> bfs(const Graph& g, Vertex source) { return bfs(g, std::span<const Vertex>(&source, 1)); }

/// Max of a BFS table, or kNoPath if some vertex is unreachable.
inline int max_or_unreachable(const std::vector<int>& dist) {
  int best = 0;
  for (int d : dist) {
    if (d == kNoPath) return kNoPath;
    best = std::max(best, d);
  }
  return best;
}

}  // namespace detail

/// Shortest-path distances from a vertex set; nullopt marks vertices in
/// components without a source.
struct DistanceTable {
  std::vector<Vertex> sources;
  std::vector<std::optional<int>> dist;

  /// max_v d(v, S), or nullopt if some vertex is unreachable.
  std::optional<int> max() const {
    int best = 0;
    for (const auto& d : dist) {
      if (!d) return std::nullopt;
      best = std::max(best, *d);
    }
    return best;
  }
};

inline DistanceTable distances_from_set(const Graph& g, std::span<const Vertex> sources) {
  if (sources.empty()) throw InvalidInput("distances_from_set: empty source set");
  for (Vertex s : sources) g.check_vertex(s);
  DistanceTable out;
  out.sources.assign(sources.begin(), sources.end());
  std::sort(out.sources.begin(), out.sources.end());
  out.sources.erase(std::unique(out.sources.begin(), out.sources.end()), out.sources.end());
  for (int d : detail::bfs(g, sources)) out.dist.push_back(d == detail::kNoPath ? std::nullopt : std::optional<int>(d));
  return out;
}

inline DistanceTable distances_from_set(const Graph& g, const std::vector<Vertex>& sources) {
  return distances_from_set(g, std::span<const Vertex>(sources));
}

/// All-pairs distances (row per source), -1 for unreachable pairs.
inline std::vector<std::vector<int>> distance_matrix(const Graph& g) {
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) out.push_back(detail::bfs(g, v));
  return out;
}

/// Eccentricity of v, or nullopt if g is disconnected.
inline std::optional<int> eccentricity(const Graph& g, Vertex v) {
  g.check_vertex(v);
  int e = detail::max_or_unreachable(detail::bfs(g, v));
  return e == detail::kNoPath ? std::nullopt : std::optional<int>(e);
}

/// Radius with the lowest-id center, for connected non-empty graphs.
struct Center {
  int radius = 0;
  Vertex vertex = 0;
};

inline Center graph_center(const Graph& g) {
  if (g.order() == 0) throw InvalidInput("graph_center: empty graph");
  Center best{-1, 0};
  for (Vertex v = 0; v < g.order(); ++v) {
    auto e = eccentricity(g, v);
    if (!e) throw InvalidInput("graph_center: graph is disconnected");
    if (best.radius < 0 || *e < best.radius) best = {*e, v};
  }
  return best;
}

inline int diameter(const Graph& g) {
  int d = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto e = eccentricity(g, v);
    if (!e) throw InvalidInput("diameter: graph is disconnected");
    d = std::max(d, *e);
  }
  return d;
}

/// A shortest u-v path. Each step goes to the lowest-id neighbor that is one
/// step closer to v.
inline std::vector<Vertex> geodesic_between(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  auto to_v = detail::bfs(g, v);
  if (to_v[static_cast<std::size_t>(u)] == detail::kNoPath)
    throw InvalidInput("geodesic_between: vertices " + std::to_string(u) + " and " + std::to_string(v) +
                       " are disconnected");
  std::vector<Vertex> path{u};
  Vertex cur = u;
  while (cur != v) {
    int d = to_v[static_cast<std::size_t>(cur)];
    for (Vertex w : g.neighbors(cur)) {
      if (to_v[static_cast<std::size_t>(w)] == d - 1) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

struct RadiusResult {
  std::optional<int> value;  // nullopt: some vertex unreachable from every size-k set
  std::vector<Vertex> witness;
};

/// rad_k(G) by exhaustive enumeration of k-subsets (lexicographically least
/// optimal witness). Budget counts subsets times n.
inline RadiusResult k_radius_exact(const Graph& g, int k, const Budget& budget = {}) {
  const int n = g.order();
  if (k < 1 || k > n) throw InvalidInput("k_radius_exact: need 1 <= k <= n");
  std::uint64_t subsets = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
  budget.require(subsets == UINT64_MAX ? subsets : subsets * static_cast<std::uint64_t>(std::max(n, 1)),
                 "k_radius_exact(k=" + std::to_string(k) + ", " + std::to_string(subsets) + " subsets)");
  RadiusResult best;
  bool found_any = false;
  for_each_subset(n, k, [&](std::span<const Vertex> s) {
    int d = detail::max_or_unreachable(detail::bfs(g, s));
    if (d == detail::kNoPath) {
      if (!found_any && best.witness.empty()) best.witness.assign(s.begin(), s.end());
      return true;
    }
    if (!found_any || d < *best.value) {
      found_any = true;
      best.value = d;
      best.witness.assign(s.begin(), s.end());
      if (d == 0) return false;
    }
    return true;
  });
  return best;
}

enum class DominationMode { exact, greedy };

namespace detail {

/// Meir-Moon style greedy on a BFS tree rooted at 0: take the deepest vertex,
/// pick its k-th ancestor a, cut off a's subtree. When fewer than k+1 vertices
/// would remain, a alone also covers the remainder.
inline std::vector<Vertex> greedy_distance_domination(const Graph& g, int k) {
  const int n = g.order();
  if (n == 0) return {};
  if (!is_connected(g)) throw InvalidInput("k_distance_dominating(greedy): graph is disconnected");
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> order;
  std::deque<Vertex> queue{0};
  depth[0] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    order.push_back(u);
    for (Vertex w : g.neighbors(u)) {
      if (depth[static_cast<std::size_t>(w)] < 0) {
        depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(u)] + 1;
        parent[static_cast<std::size_t>(w)] = u;
        queue.push_back(w);
      }
    }
  }
  std::vector<std::vector<Vertex>> children(static_cast<std::size_t>(n));
  for (Vertex v : order)
    if (parent[static_cast<std::size_t>(v)] >= 0) children[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])].push_back(v);

  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  int remaining = n;
  std::vector<Vertex> chosen;
  while (remaining > 0) {
    Vertex deepest = -1;
    for (Vertex v : order)
      if (alive[static_cast<std::size_t>(v)] &&
          (deepest < 0 || depth[static_cast<std::size_t>(v)] > depth[static_cast<std::size_t>(deepest)]))
        deepest = v;
    if (depth[static_cast<std::size_t>(deepest)] <= k) {
      chosen.push_back(0);
      break;
    }
    Vertex a = deepest;
    for (int i = 0; i < k; ++i) a = parent[static_cast<std::size_t>(a)];
    std::vector<Vertex> subtree;
    std::vector<Vertex> stack{a};
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      if (!alive[static_cast<std::size_t>(u)]) continue;
      subtree.push_back(u);
      for (Vertex c : children[static_cast<std::size_t>(u)]) stack.push_back(c);
    }
    chosen.push_back(a);
    if (remaining - static_cast<int>(subtree.size()) <= k) break;
    for (Vertex u : subtree) alive[static_cast<std::size_t>(u)] = 0;
    remaining -= static_cast<int>(subtree.size());
  }
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  return chosen;
}

/// Branch and bound for a minimum set within distance k of every vertex.
/// Branches on the undominated vertex with the fewest candidate dominators;
/// candidates whose ball is contained in another candidate's ball are skipped.
class DominationSearch {
 public:
  DominationSearch(const Graph& g, int k, const Budget& budget)
      : n_(g.order()), counter_(budget, "k_distance_dominating(exact, k=" + std::to_string(k) + ")") {
    auto dm = distance_matrix(g);
    ball_.assign(static_cast<std::size_t>(n_), std::vector<char>(static_cast<std::size_t>(n_), 0));
    balls_.resize(static_cast<std::size_t>(n_));
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = 0; v < n_; ++v)
        if (dm[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] != kNoPath &&
            dm[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] <= k) {
          ball_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
          balls_[static_cast<std::size_t>(u)].push_back(v);
        }
    dist_ = std::move(dm);
    k_ = k;
  }

  std::vector<Vertex> solve(std::vector<Vertex> incumbent) {
    best_ = std::move(incumbent);
    std::vector<int> covered(static_cast<std::size_t>(n_), 0);
    std::vector<Vertex> current;
    recurse(covered, current, n_);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  bool covers(Vertex center, Vertex v) const { return ball_[static_cast<std::size_t>(center)][static_cast<std::size_t>(v)] != 0; }

  // Vertices pairwise farther than 2k apart need distinct dominators.
  int packing_bound(const std::vector<int>& covered) const {
    std::vector<Vertex> packed;
    for (Vertex v = 0; v < n_; ++v) {
      if (covered[static_cast<std::size_t>(v)]) continue;
      bool ok = true;
      for (Vertex p : packed) {
        int d = dist_[static_cast<std::size_t>(p)][static_cast<std::size_t>(v)];
        if (d != kNoPath && d <= 2 * k_) {
          ok = false;
          break;
        }
      }
      if (ok) packed.push_back(v);
    }
    return static_cast<int>(packed.size());
  }

  void recurse(std::vector<int>& covered, std::vector<Vertex>& current, int uncovered) {
    counter_.tick();
    if (uncovered == 0) {
      if (current.size() < best_.size()) best_ = current;
      return;
    }
    if (current.size() + 1 >= best_.size()) return;
    if (current.size() + static_cast<std::size_t>(packing_bound(covered)) >= best_.size()) return;

    Vertex pick = -1;
    std::size_t fewest = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (covered[static_cast<std::size_t>(v)]) continue;
      std::size_t options = balls_[static_cast<std::size_t>(v)].size();  // symmetric: centers covering v
      if (pick < 0 || options < fewest) {
        pick = v;
        fewest = options;
      }
    }
    std::vector<Vertex> candidates = balls_[static_cast<std::size_t>(pick)];
    std::vector<Vertex> useful;
    for (Vertex c : candidates) {
      bool dominated = false;
      for (Vertex d : candidates) {
        if (d == c) continue;
        bool subset = true;
        bool equal = true;
        for (Vertex v = 0; v < n_ && subset; ++v) {
          if (covered[static_cast<std::size_t>(v)]) continue;
          bool in_c = covers(c, v), in_d = covers(d, v);
          if (in_c && !in_d) subset = false;
          if (in_c != in_d) equal = false;
        }
        if (subset && (!equal || d < c)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) useful.push_back(c);
    }
    for (Vertex c : useful) {
      int newly = 0;
      for (Vertex v : balls_[static_cast<std::size_t>(c)])
        if (covered[static_cast<std::size_t>(v)]++ == 0) ++newly;
      current.push_back(c);
      recurse(covered, current, uncovered - newly);
      current.pop_back();
      for (Vertex v : balls_[static_cast<std::size_t>(c)]) --covered[static_cast<std::size_t>(v)];
    }
  }

  int n_;
  int k_ = 1;
  StepCounter counter_;
  std::vector<std::vector<char>> ball_;
  std::vector<std::vector<Vertex>> balls_;
  std::vector<std::vector<int>> dist_;
  std::vector<Vertex> best_;
};

}  // namespace detail

/// A set S with d(v,S) <= k for every v. Greedy mode follows the Meir-Moon
/// argument and never exceeds floor(n/(k+1)) on connected graphs with n >= k+1;
/// exact mode returns a minimum set (branch and bound, budget counts nodes).
inline std::vector<Vertex> k_distance_dominating(const Graph& g, int k, DominationMode mode,
                                                 const Budget& budget = {}) {
  if (k < 1) throw InvalidInput("k_distance_dominating: k must be positive");
  if (mode == DominationMode::greedy) return detail::greedy_distance_domination(g, k);
  if (g.order() == 0) return {};
  std::vector<Vertex> incumbent(static_cast<std::size_t>(g.order()));
  std::iota(incumbent.begin(), incumbent.end(), 0);
  if (is_connected(g)) {
    auto greedy = detail::greedy_distance_domination(g, k);
    if (greedy.size() < incumbent.size()) incumbent = greedy;
  }
  return detail::DominationSearch(g, k, budget).solve(std::move(incumbent));
}

/// Domination number gamma(G).
inline int domination_number(const Graph& g, const Budget& budget = {}) {
  return static_cast<int>(k_distance_dominating(g, 1, DominationMode::exact, budget).size());
}

}  // namespace copthrottle
