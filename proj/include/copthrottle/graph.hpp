#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "copthrottle/errors.hpp"

namespace copthrottle {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are sorted and duplicate-free; a dense adjacency matrix is
/// kept alongside for O(1) edge queries. Construction validates that the edge
/// list is simple (no loops, ids in range); duplicate edges are merged.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n, std::string name = {}) : n_(checked_order(n)), adj_(static_cast<std::size_t>(n)), name_(std::move(name)) {
    matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  }

  static Graph from_edges(int n, std::span<const Edge> edges, std::string name = {}) {
    Graph g(n, std::move(name));
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                           std::to_string(n));
      if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
      if (g.matrix_[g.index(u, v)]) continue;
      g.matrix_[g.index(u, v)] = g.matrix_[g.index(v, u)] = 1;
      g.adj_[static_cast<std::size_t>(u)].push_back(v);
      g.adj_[static_cast<std::size_t>(v)].push_back(u);
      ++g.m_;
    }
    for (auto& list : g.adj_) std::sort(list.begin(), list.end());
    return g;
  }

  static Graph from_edges(int n, const std::vector<Edge>& edges, std::string name = {}) {
    return from_edges(n, std::span<const Edge>(edges), std::move(name));
  }

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }
  const std::string& name() const noexcept { return name_; }

  Graph renamed(std::string name) const {
    Graph g = *this;
    g.name_ = std::move(name);
    return g;
  }

  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool adjacent(Vertex u, Vertex v) const noexcept { return matrix_[index(u, v)] != 0; }

  /// u == v or uv is an edge.
  bool in_closed_neighborhood(Vertex u, Vertex v) const noexcept { return u == v || adjacent(u, v); }

  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

  void check_vertex(Vertex v) const {
    if (!contains(v))
      throw InvalidInput("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
  }

  /// Closed neighborhood N[v], sorted.
  std::vector<Vertex> closed_neighborhood(Vertex v) const {
    auto nb = neighbors(v);
    std::vector<Vertex> out(nb.begin(), nb.end());
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
  }

  /// Edge list with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : adj_[static_cast<std::size_t>(u)])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  static int checked_order(int n) {
    if (n < 0) throw InvalidInput("graph order must be non-negative");
    return n;
  }

  std::size_t index(Vertex u, Vertex v) const noexcept {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<char> matrix_;
  std::string name_;
};

/// An induced subgraph together with the vertex relabeling in both directions.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;    // sub id -> parent id
  std::vector<Vertex> from_parent;  // parent id -> sub id, or -1 if dropped
};

/// Subgraph induced on `keep` (any order, duplicates ignored); new ids follow
/// increasing parent id.
inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  InducedSubgraph out;
  out.from_parent.assign(static_cast<std::size_t>(g.order()), -1);
  std::vector<char> mark(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : keep) {
    g.check_vertex(v);
    mark[static_cast<std::size_t>(v)] = 1;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!mark[static_cast<std::size_t>(v)]) continue;
    out.from_parent[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.to_parent.size());
    out.to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    Vertex a = out.from_parent[static_cast<std::size_t>(u)];
    Vertex b = out.from_parent[static_cast<std::size_t>(v)];
    if (a >= 0 && b >= 0) edges.emplace_back(a, b);
  }
  out.graph = Graph::from_edges(static_cast<int>(out.to_parent.size()), edges, g.name());
  return out;
}

inline InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep) {
  return induced_subgraph(g, std::span<const Vertex>(keep));
}

/// G - removed.
inline InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<char> drop(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : removed) {
    g.check_vertex(v);
    drop[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!drop[static_cast<std::size_t>(v)]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

/// Connected components, each sorted, ordered by smallest member.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<Vertex> stack{s};
    comp[static_cast<std::size_t>(s)] = id;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      out.back().push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

inline bool is_connected(const Graph& g) { return g.order() <= 1 || connected_components(g).size() == 1; }

/// Disjoint union; vertices of `b` are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b, std::string name = {}) {
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
  return Graph::from_edges(a.order() + b.order(), edges, std::move(name));
}

/// Binomial coefficient, saturating at UINT64_MAX.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

/// Calls f(span) for every k-subset of {0..n-1} in lexicographic order.
/// f returns false to stop early.
template <class F>
void for_each_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  std::vector<Vertex> s(static_cast<std::size_t>(k));
  std::iota(s.begin(), s.end(), 0);
  while (true) {
    if (!f(std::span<const Vertex>(s))) return;
    int i = k - 1;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++s[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace copthrottle
