#pragma once

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "copthrottle/distance.hpp"
#include "copthrottle/errors.hpp"
#include "copthrottle/graph.hpp"

namespace copthrottle {

/// `dominator` corners `corner`: N[corner] is a subset of N[dominator].
struct CornerWitness {
  Vertex corner = 0;
  Vertex dominator = 0;

  friend bool operator==(const CornerWitness&, const CornerWitness&) = default;
};

inline bool closed_neighborhood_within(const Graph& g, Vertex v, Vertex u) {
  if (!g.in_closed_neighborhood(v, u)) return false;
  for (Vertex w : g.neighbors(v))
    if (w != u && !g.adjacent(w, u)) return false;
  return true;
}

/// Every ordered pair (v, u), v != u, with N[v] a subset of N[u]; sorted by
/// corner then dominator.
inline std::vector<CornerWitness> corners(const Graph& g) {
  std::vector<CornerWitness> out;
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex u = 0; u < g.order(); ++u)
      if (u != v && closed_neighborhood_within(g, v, u)) out.push_back({v, u});
  return out;
}

/// Whether every member of `c` is cornered by some vertex outside `c`.
inline bool is_disjoint_corner_set(const Graph& g, std::span<const Vertex> c) {
  std::vector<char> in(g.order(), 0);
  for (Vertex v : c) in[v] = 1;
  for (Vertex v : c) {
    bool ok = false;
    for (Vertex u = 0; u < g.order() && !ok; ++u)
      if (!in[u] && closed_neighborhood_within(g, v, u)) ok = true;
    if (!ok) return false;
  }
  return true;
}

/// Vertices u in v's component with d(u,v) >= d(w,v) for every neighbor w of u.
inline std::vector<Vertex> boundary_vertices(const Graph& g, Vertex v) {
  g.check_vertex(v);
  auto dist = detail::bfs(g, v);
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (dist[u] == detail::kNoPath) continue;
    bool boundary = true;
    for (Vertex w : g.neighbors(u))
      if (dist[w] > dist[u]) boundary = false;
    if (boundary) out.push_back(u);
  }
  return out;
}

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

inline bool acyclic_without(const Graph& g, const std::vector<char>& removed) {
  DisjointSets ds(g.order());
  for (auto [u, v] : g.edges()) {
    if (removed[u] || removed[v]) continue;
    if (!ds.unite(u, v)) return false;
  }
  return true;
}

}  // namespace detail

inline bool is_forest(const Graph& g) { return detail::acyclic_without(g, std::vector<char>(g.order(), 0)); }

inline bool is_tree(const Graph& g) { return g.order() >= 1 && is_connected(g) && g.size() + 1 == static_cast<std::size_t>(g.order()); }

struct FeedbackSet {
  int size = 0;
  std::vector<Vertex> witness;
};

/// Minimum feedback vertex set by increasing subset size (lexicographically
/// least witness at the optimal size).
inline FeedbackSet feedback_vertex_number(const Graph& g, const Budget& budget = {}) {
  StepCounter counter(budget, "feedback_vertex_number");
  const int n = g.order();
  for (int s = 0; s <= n; ++s) {
    std::vector<Vertex> found;
    bool done = false;
    for_each_subset(n, s, [&](std::span<const Vertex> subset) {
      counter.tick(g.size() + 1);
      std::vector<char> removed(n, 0);
      for (Vertex v : subset) removed[v] = 1;
      if (detail::acyclic_without(g, removed)) {
        found.assign(subset.begin(), subset.end());
        done = true;
        return false;
      }
      return true;
    });
    if (done) return {s, found};
  }
  return {n, {}};  // unreachable: removing everything leaves the empty forest
}

/// K4 minor test by series-parallel reduction: delete vertices of degree <= 1,
/// suppress vertices of degree 2 (merging parallel edges). The graph is K4-minor
/// free iff this empties it.
inline bool has_k4_minor(const Graph& g) {
  std::vector<std::set<Vertex>> adj(g.order());
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<char> alive(g.order(), 1);
  int remaining = g.order();
  bool changed = true;
  while (changed && remaining > 0) {
    changed = false;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!alive[v] || adj[v].size() > 2) continue;
      if (adj[v].size() == 2) {
        Vertex a = *adj[v].begin();
        Vertex b = *adj[v].rbegin();
        adj[a].insert(b);
        adj[b].insert(a);
      }
      for (Vertex w : adj[v]) adj[w].erase(v);
      adj[v].clear();
      alive[v] = 0;
      --remaining;
      changed = true;
    }
  }
  return remaining > 0;
}

namespace detail {

/// Number of internally vertex-disjoint a-b paths that avoid the edge ab,
/// capped at `cap`. Unit-capacity flow on the vertex-split graph.
inline int disjoint_long_paths(const Graph& g, Vertex a, Vertex b, int cap) {
  const int n = g.order();
  // node 2v = v_in, 2v+1 = v_out
  const int nodes = 2 * n;
  std::vector<std::vector<int>> head(nodes);
  struct Arc {
    int to;
    int cap;
  };
  std::vector<Arc> arcs;
  auto add = [&](int u, int v, int c) {
    head[u].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({v, c});
    head[v].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({u, 0});
  };
  for (Vertex v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == a || v == b) ? cap : 1);
  for (auto [u, v] : g.edges()) {
    if ((u == a && v == b) || (u == b && v == a)) continue;
    add(2 * u + 1, 2 * v, 1);
    add(2 * v + 1, 2 * u, 1);
  }
  const int source = 2 * a + 1, sink = 2 * b;
  int flow = 0;
  while (flow < cap) {
    std::vector<int> via(nodes, -1);
    std::vector<char> seen(nodes, 0);
    std::deque<int> queue{source};
    seen[source] = 1;
    while (!queue.empty() && !seen[sink]) {
      int u = queue.front();
      queue.pop_front();
      for (int id : head[u]) {
        if (arcs[id].cap > 0 && !seen[arcs[id].to]) {
          seen[arcs[id].to] = 1;
          via[arcs[id].to] = id;
          queue.push_back(arcs[id].to);
        }
      }
    }
    if (!seen[sink]) break;
    for (int v = sink; v != source; v = arcs[via[v] ^ 1].to) {
      arcs[via[v]].cap -= 1;
      arcs[via[v] ^ 1].cap += 1;
    }
    ++flow;
  }
  return flow;
}

}  // namespace detail

/// K_{2,3} minor test. K_{2,3} has maximum degree 3, so a minor exists iff a
/// subdivision does: two branch vertices joined by three internally disjoint
/// paths of length at least 2.
inline bool has_k23_minor(const Graph& g) {
  for (Vertex a = 0; a < g.order(); ++a) {
    if (g.degree(a) < 3) continue;
    for (Vertex b = a + 1; b < g.order(); ++b) {
      if (g.degree(b) < 3) continue;
      if (detail::disjoint_long_paths(g, a, b, 3) >= 3) return true;
    }
  }
  return false;
}

/// Outerplanar iff neither K4 nor K_{2,3} is a minor.
inline bool is_outerplanar(const Graph& g) { return !has_k4_minor(g) && !has_k23_minor(g); }

}  // namespace copthrottle
