#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "copthrottle/distance.hpp"
#include "copthrottle/errors.hpp"
#include "copthrottle/game.hpp"
#include "copthrottle/graph.hpp"
#include "copthrottle/strategy.hpp"
#include "copthrottle/structure.hpp"

namespace copthrottle {

struct EliminationOrdering {
  std::vector<Vertex> lexbfs;       // visit order
  std::vector<Vertex> elimination;  // reverse visit order; perfect iff chordal
  bool chordal = false;
  std::vector<Vertex> induced_cycle;  // length >= 4 when not chordal
};

namespace detail {

/// Lex-BFS by direct label comparison (quadratic, fine at desk scale); ties
/// go to the lowest id.
inline std::vector<Vertex> lexbfs(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> label(n);
  std::vector<char> done(n, 0);
  std::vector<Vertex> order;
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (done[v]) continue;
      if (pick < 0 || label[v] > label[pick]) pick = v;
    }
    done[pick] = 1;
    order.push_back(pick);
    for (Vertex w : g.neighbors(pick))
      if (!done[w]) label[w].push_back(n - step);
  }
  return order;
}

/// Induced cycle through v, a, b (a, b non-adjacent neighbors of v), if the
/// rest of the cycle can avoid N[v].
inline std::vector<Vertex> induced_cycle_through(const Graph& g, Vertex v, Vertex a, Vertex b) {
  std::vector<Vertex> keep;
  for (Vertex u = 0; u < g.order(); ++u)
    if (u == a || u == b || !g.in_closed_neighborhood(v, u)) keep.push_back(u);
  InducedSubgraph sub = induced_subgraph(g, keep);
  auto dist = bfs(sub.graph, sub.from_parent[a]);
  if (dist[sub.from_parent[b]] == kNoPath) return {};
  auto path = geodesic_between(sub.graph, sub.from_parent[a], sub.from_parent[b]);
  std::vector<Vertex> cycle{v};
  for (Vertex p : path) cycle.push_back(sub.to_parent[p]);
  return cycle;
}

}  // namespace detail

/// Lex-BFS ordering, chordality by checking the reversed order for the perfect
/// elimination property, and an induced cycle of length >= 4 otherwise.
inline EliminationOrdering lexbfs_order(const Graph& g) {
  const int n = g.order();
  EliminationOrdering out;
  out.lexbfs = detail::lexbfs(g);
  out.elimination.assign(out.lexbfs.rbegin(), out.lexbfs.rend());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[out.elimination[i]] = i;
  std::optional<std::array<Vertex, 3>> bad;
  for (Vertex v : out.elimination) {
    std::vector<Vertex> later;
    for (Vertex w : g.neighbors(v))
      if (pos[w] > pos[v]) later.push_back(w);
    for (std::size_t i = 0; i < later.size() && !bad; ++i)
      for (std::size_t j = i + 1; j < later.size() && !bad; ++j)
        if (!g.adjacent(later[i], later[j])) bad = std::array<Vertex, 3>{v, later[i], later[j]};
    if (bad) break;
  }
  out.chordal = !bad;
  if (out.chordal) return out;
  out.induced_cycle = detail::induced_cycle_through(g, (*bad)[0], (*bad)[1], (*bad)[2]);
  for (Vertex v = 0; v < n && out.induced_cycle.empty(); ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size() && out.induced_cycle.empty(); ++i)
      for (std::size_t j = i + 1; j < nb.size() && out.induced_cycle.empty(); ++j)
        if (!g.adjacent(nb[i], nb[j])) out.induced_cycle = detail::induced_cycle_through(g, v, nb[i], nb[j]);
  }
  if (out.induced_cycle.empty()) throw std::logic_error("lexbfs_order: non-chordal verdict without a witness cycle");
  return out;
}

inline bool is_chordal(const Graph& g) { return lexbfs_order(g).chordal; }

inline nlohmann::json ordering_to_json(const EliminationOrdering& e) {
  nlohmann::json j{{"lexbfs", e.lexbfs}, {"elimination", e.elimination}, {"chordal", e.chordal}};
  if (!e.chordal) j["induced_cycle"] = e.induced_cycle;
  return j;
}

namespace detail {

inline void require_connected_chordal(const Graph& g, const char* what) {
  if (g.order() == 0) throw InvalidInput(std::string(what) + ": empty graph");
  if (!is_connected(g)) throw InvalidInput(std::string(what) + ": graph is not connected");
  if (!is_chordal(g)) throw InvalidInput(std::string(what) + ": graph is not chordal");
}

}  // namespace detail

struct CliqueDecomposition {
  std::vector<std::vector<Vertex>> cliques;
};

/// Checks the running-intersection invariants; empty string when they hold.
inline std::string clique_decomposition_violation(const Graph& g, const CliqueDecomposition& d) {
  std::vector<char> seen(g.order(), 0);
  for (std::size_t i = 0; i < d.cliques.size(); ++i) {
    const auto& x = d.cliques[i];
    if (x.empty()) return "empty clique";
    for (std::size_t a = 0; a < x.size(); ++a)
      for (std::size_t b = a + 1; b < x.size(); ++b)
        if (!g.adjacent(x[a], x[b])) return "set " + std::to_string(i) + " is not a clique";
    if (i > 0) {
      std::vector<Vertex> meet;
      for (Vertex v : x)
        if (seen[v]) meet.push_back(v);
      if (meet.empty()) return "set " + std::to_string(i) + " does not meet earlier sets";
      bool inside = false;
      for (std::size_t l = 0; l < i && !inside; ++l)
        inside = std::includes(d.cliques[l].begin(), d.cliques[l].end(), meet.begin(), meet.end());
      if (!inside) return "set " + std::to_string(i) + " meets earlier sets outside any single earlier set";
    }
    for (Vertex v : x) seen[v] = 1;
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (!seen[v]) return "vertex " + std::to_string(v) + " uncovered";
  return {};
}

/// Maximal cliques from the perfect elimination ordering, ordered along a
/// maximum-weight clique tree (Prim from the lexicographically first clique).
inline CliqueDecomposition clique_decomposition(const Graph& g) {
  detail::require_connected_chordal(g, "clique_decomposition");
  const int n = g.order();
  auto elim = lexbfs_order(g).elimination;
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[elim[i]] = i;
  std::vector<std::vector<Vertex>> candidates;
  for (Vertex v : elim) {
    std::vector<Vertex> c{v};
    for (Vertex w : g.neighbors(v))
      if (pos[w] > pos[v]) c.push_back(w);
    std::sort(c.begin(), c.end());
    candidates.push_back(c);
  }
  std::vector<std::vector<Vertex>> maximal;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool contained = false;
    for (std::size_t j = 0; j < candidates.size() && !contained; ++j) {
      if (i == j) continue;
      const auto& a = candidates[i];
      const auto& b = candidates[j];
      if (a.size() < b.size() || (a.size() == b.size() && j < i))
        contained = std::includes(b.begin(), b.end(), a.begin(), a.end());
    }
    if (!contained) maximal.push_back(candidates[i]);
  }
  std::sort(maximal.begin(), maximal.end());
  const std::size_t m = maximal.size();
  auto weight = [&](std::size_t a, std::size_t b) {
    std::vector<Vertex> meet;
    std::set_intersection(maximal[a].begin(), maximal[a].end(), maximal[b].begin(), maximal[b].end(),
                          std::back_inserter(meet));
    return static_cast<int>(meet.size());
  };
  CliqueDecomposition out;
  std::vector<char> in_tree(m, 0);
  in_tree[0] = 1;
  out.cliques.push_back(maximal[0]);
  for (std::size_t added = 1; added < m; ++added) {
    int best_w = -1;
    std::size_t best = 0;
    for (std::size_t c = 0; c < m; ++c) {
      if (in_tree[c]) continue;
      int w = 0;
      for (std::size_t t = 0; t < m; ++t)
        if (in_tree[t]) w = std::max(w, weight(c, t));
      if (w > best_w) {
        best_w = w;
        best = c;
      }
    }
    in_tree[best] = 1;
    out.cliques.push_back(maximal[best]);
  }
  if (auto why = clique_decomposition_violation(g, out); !why.empty())
    throw std::logic_error("clique_decomposition: " + why);
  return out;
}

inline nlohmann::json decomposition_to_json(const CliqueDecomposition& d) { return {{"cliques", d.cliques}}; }

/// Deletes corners off the path p, lowest id first, until only p remains.
/// Each step records the corner and its lowest-id dominator in the residual graph.
inline std::vector<CornerWitness> corner_elimination_sequence(const Graph& g, std::span<const Vertex> p) {
  const int n = g.order();
  if (!is_path_in(g, p)) throw InvalidInput("corner_elimination_sequence: p is not a path in the graph");
  std::vector<char> on_path(n, 0), alive(n, 1);
  for (Vertex v : p) on_path[v] = 1;
  auto cornered_by = [&](Vertex v, Vertex u) {
    if (!g.adjacent(v, u)) return false;
    for (Vertex w : g.neighbors(v))
      if (alive[w] && w != u && !g.adjacent(w, u)) return false;
    return true;
  };
  std::vector<CornerWitness> out;
  int remaining = n - static_cast<int>(p.size());
  while (remaining > 0) {
    bool found = false;
    for (Vertex v = 0; v < n && !found; ++v) {
      if (!alive[v] || on_path[v]) continue;
      for (Vertex u = 0; u < n && !found; ++u) {
        if (u == v || !alive[u] || !cornered_by(v, u)) continue;
        out.push_back({v, u});
        alive[v] = 0;
        --remaining;
        found = true;
      }
    }
    if (!found) throw InvalidInput("corner_elimination_sequence: no corner available off the path");
  }
  return out;
}

inline std::vector<CornerWitness> corner_elimination_sequence(const Graph& g, const std::vector<Vertex>& p) {
  return corner_elimination_sequence(g, std::span<const Vertex>(p));
}

/// capt(G;S) = max_v d(v,S) on connected chordal graphs; no game search.
inline GameValue chordal_capture_fast(const Graph& g, const CopConfig& s) {
  detail::require_connected_chordal(g, "chordal_capture_fast");
  s.validate(g);
  return GameValue::finite(*distances_from_set(g, s.vector()).max());
}

struct ChordalThrottling {
  int radius = 0;
  Vertex center = 0;
  int th_prod = 0;  // 1 + rad(G)
  int th_sum = 0;   // exact when th_sum_exact, else the greedy bound
  bool th_sum_exact = false;
  int th_sum_k = 0;
  std::vector<Vertex> th_sum_witness;
  std::vector<int> rad_k;  // rad_k[k-1] for every k evaluated exactly
  // greedy placement: a distance-l dominating set of size at most floor(n/(l+1))
  int greedy_bound = 0;
  int greedy_radius = 0;
  std::vector<Vertex> greedy_witness;
};

/// th_c^x = 1 + rad(G) with a center witness, and th_c = min_k (k + rad_k(G))
/// via exact k-radii. When the radius search exceeds its budget, th_c falls
/// back to the best greedy distance-domination placement, labeled as a bound.
inline ChordalThrottling chordal_throttling(const Graph& g, const Budget& budget = {}) {
  detail::require_connected_chordal(g, "chordal_throttling");
  const int n = g.order();
  ChordalThrottling out;
  Center c = graph_center(g);
  out.radius = c.radius;
  out.center = c.vertex;
  out.th_prod = 1 + c.radius;

  out.greedy_bound = n;
  out.greedy_radius = 0;
  out.greedy_witness.resize(n);
  std::iota(out.greedy_witness.begin(), out.greedy_witness.end(), 0);
  for (int l = 1; l < n; ++l) {
    auto d = k_distance_dominating(g, l, DominationMode::greedy, budget);
    if (static_cast<int>(d.size()) + l < out.greedy_bound) {
      out.greedy_bound = static_cast<int>(d.size()) + l;
      out.greedy_radius = l;
      out.greedy_witness = d;
    }
  }

  try {
    int best = n;
    std::vector<Vertex> witness(out.greedy_witness);
    int best_k = n;
    for (int k = 1; k <= n && k < best; ++k) {
      RadiusResult r = k_radius_exact(g, k, budget);
      out.rad_k.push_back(*r.value);
      if (k + *r.value < best || (k + *r.value == best && k < best_k)) {
        best = k + *r.value;
        best_k = k;
        witness = r.witness;
      }
    }
    out.th_sum = best;
    out.th_sum_k = best_k;
    out.th_sum_witness = witness;
    out.th_sum_exact = true;
  } catch (const BudgetExceeded&) {
    out.th_sum = out.greedy_bound;
    out.th_sum_k = static_cast<int>(out.greedy_witness.size());
    out.th_sum_witness = out.greedy_witness;
    out.th_sum_exact = false;
  }
  return out;
}

/// Each cop guards the ball of radius `radius` around its vertex by chasing
/// the robber's shadow under a retraction onto the ball; claimed bound is the
/// largest single-ball capture time (at most `radius` on chordal graphs).
inline PlacementCertificate ball_cover_strategy(const Graph& g, const CopConfig& s, int radius, const Budget& budget = {}) {
  detail::require_connected_chordal(g, "ball_cover_strategy");
  s.validate(g);
  std::vector<Vertex> centers = s.vector();
  return ball_guard_certificate(g, g, centers, radius, {}, budget);
}

}  // namespace copthrottle
