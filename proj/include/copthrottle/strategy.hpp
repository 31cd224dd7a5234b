#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "copthrottle/distance.hpp"
#include "copthrottle/errors.hpp"
#include "copthrottle/game.hpp"
#include "copthrottle/graph.hpp"
#include "copthrottle/lambert.hpp"
#include "copthrottle/structure.hpp"

namespace copthrottle {

/// 1-based path indices for guarding a path with k+1 vertices within radius r:
/// the j-th cop sits at min(k+1, r+1+(2r+1)j). The clamp keeps the last cop on
/// the path when the formula overshoots.
inline std::vector<int> guard_placement(int k, int r) {
  if (k < 0) throw InvalidInput("guard_placement: path length must be non-negative");
  if (r < 1) throw InvalidInput("guard_placement: radius must be positive");
  const int count = (k + 1 + 2 * r) / (2 * r + 1);
  std::vector<int> out;
  for (int j = 0; j < count; ++j) out.push_back(std::min(k + 1, r + 1 + (2 * r + 1) * j));
  return out;
}

inline bool is_path_in(const Graph& g, std::span<const Vertex> p) {
  if (p.empty()) return false;
  std::vector<char> seen(g.order(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!g.contains(p[i]) || seen[p[i]]) return false;
    seen[p[i]] = 1;
    if (i && !g.adjacent(p[i - 1], p[i])) return false;
  }
  return true;
}

inline bool is_geodesic(const Graph& g, std::span<const Vertex> p) {
  if (!is_path_in(g, p)) return false;
  auto dist = detail::bfs(g, p.front());
  for (std::size_t i = 0; i < p.size(); ++i)
    if (dist[p[i]] != static_cast<int>(i)) return false;
  return true;
}

/// phi(u) = v_{1 + min(d(v_1, u), k)} onto a geodesic v_1..v_{k+1}.
struct PathRetraction {
  std::vector<Vertex> path;
  std::vector<int> image;  // per vertex: 0-based index on the path, -1 outside the path's component

  Vertex shadow(Vertex v) const {
    if (image.at(v) < 0) throw InvalidInput("path retraction undefined at vertex " + std::to_string(v));
    return path[image[v]];
  }
};

namespace detail {

inline PathRetraction path_retraction_in_component(const Graph& g, std::span<const Vertex> p) {
  if (!is_geodesic(g, p)) throw InvalidInput("path_retraction: path is not a geodesic");
  PathRetraction out;
  out.path.assign(p.begin(), p.end());
  const int k = static_cast<int>(p.size()) - 1;
  auto dist = bfs(g, p.front());
  out.image.assign(g.order(), -1);
  for (Vertex v = 0; v < g.order(); ++v)
    if (dist[v] != kNoPath) out.image[v] = std::min(dist[v], k);
  return out;
}

}  // namespace detail

inline PathRetraction path_retraction(const Graph& g, std::span<const Vertex> p) {
  if (!is_connected(g)) throw InvalidInput("path_retraction: graph is disconnected");
  PathRetraction out = detail::path_retraction_in_component(g, p);
  for (auto [u, v] : g.edges())
    if (std::abs(out.image[u] - out.image[v]) > 1) throw std::logic_error("path_retraction: edge property violated");
  return out;
}

inline PathRetraction path_retraction(const Graph& g, const std::vector<Vertex>& p) {
  return path_retraction(g, std::span<const Vertex>(p));
}

struct GuardStep {
  std::vector<Vertex> cops;
  Vertex robber = 0;
  Vertex shadow = 0;
};

struct GuardSimulation {
  std::optional<int> rounds_to_guard;  // nullopt: the shadow is never caught
  std::vector<GuardStep> transcript;   // one worst-case line of play
};

/// Cops start at guard_placement(|p|-1, r) on the geodesic p; every cop steps
/// one vertex along p toward the robber's shadow each round. Returns the
/// worst case, over all robber play, of the first round after which some cop
/// stands on the shadow (0 if one already does at the start).
inline GuardSimulation shadow_guard_simulate(const Graph& g, std::span<const Vertex> p, int r, const Budget& budget = {}) {
  PathRetraction phi = path_retraction(g, p);
  const int k = static_cast<int>(p.size()) - 1;
  std::vector<int> start;
  for (int idx : guard_placement(k, r)) start.push_back(idx - 1);
  const int n = g.order();
  StepCounter counter(budget, "shadow_guard_simulate");

  // state: cop indices (sorted) + robber vertex, cops to move
  std::map<std::pair<std::vector<int>, Vertex>, int> memo;
  std::map<std::pair<std::vector<int>, Vertex>, Vertex> choice;
  std::map<std::pair<std::vector<int>, Vertex>, char> on_stack;
  bool infinite = false;

  auto step = [&](const std::vector<int>& cops, Vertex robber) {
    int s = phi.image[robber];
    std::vector<int> next = cops;
    for (int& c : next) c += (s > c) - (s < c);
    std::sort(next.begin(), next.end());
    return next;
  };
  auto caught = [&](const std::vector<int>& cops, Vertex robber) {
    return std::find(cops.begin(), cops.end(), phi.image[robber]) != cops.end();
  };

  // iterative DFS; value = rounds until a cop lands on the shadow
  struct Frame {
    std::pair<std::vector<int>, Vertex> key;
    std::vector<int> next;
    std::vector<Vertex> replies;
    std::size_t i = 0;
    int best = 1;
    Vertex best_reply = -1;
  };
  auto solve = [&](const std::vector<int>& cops0, Vertex robber0) -> std::optional<int> {
    std::vector<Frame> stack;
    auto push = [&](std::pair<std::vector<int>, Vertex> key) {
      counter.tick();
      Frame f;
      f.key = key;
      f.next = step(key.first, key.second);
      if (!caught(f.next, key.second)) {
        f.replies.push_back(key.second);
        for (Vertex w : g.neighbors(key.second)) f.replies.push_back(w);
        std::sort(f.replies.begin(), f.replies.end());
      }
      on_stack[key] = 1;
      stack.push_back(std::move(f));
    };
    std::pair<std::vector<int>, Vertex> root{cops0, robber0};
    if (auto it = memo.find(root); it != memo.end()) return it->second;
    push(root);
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.i < f.replies.size()) {
        std::pair<std::vector<int>, Vertex> child{f.next, f.replies[f.i]};
        if (auto it = memo.find(child); it != memo.end()) {
          if (1 + it->second > f.best) {
            f.best = 1 + it->second;
            f.best_reply = f.replies[f.i];
          }
          ++f.i;
          continue;
        }
        if (on_stack.count(child) && on_stack[child]) {
          infinite = true;
          return std::nullopt;
        }
        push(child);
        continue;
      }
      memo[f.key] = f.best;
      choice[f.key] = f.best_reply;
      on_stack[f.key] = 0;
      Frame done = std::move(f);
      stack.pop_back();
      if (!stack.empty()) {
        Frame& parent = stack.back();
        if (1 + done.best > parent.best) {
          parent.best = 1 + done.best;
          parent.best_reply = parent.replies[parent.i];
        }
        ++parent.i;
      }
    }
    return memo[root];
  };

  GuardSimulation out;
  int worst = 0;
  Vertex worst_start = -1;
  std::vector<int> cops0 = start;
  for (Vertex r0 = 0; r0 < n; ++r0) {
    if (caught(cops0, r0)) continue;
    auto v = solve(cops0, r0);
    if (!v) break;
    if (*v > worst) {
      worst = *v;
      worst_start = r0;
    }
  }
  auto to_vertices = [&](const std::vector<int>& idx) {
    std::vector<Vertex> out_v;
    for (int i : idx) out_v.push_back(phi.path[i]);
    return out_v;
  };
  if (infinite) return out;
  out.rounds_to_guard = worst;
  Vertex robber = worst_start >= 0 ? worst_start : 0;
  std::vector<int> cops = cops0;
  out.transcript.push_back({to_vertices(cops), robber, phi.path[phi.image[robber]]});
  if (worst_start >= 0) {
    while (true) {
      std::vector<int> next = step(cops, robber);
      Vertex reply = choice[{cops, robber}];
      if (caught(next, robber)) {
        out.transcript.push_back({to_vertices(next), robber, phi.path[phi.image[robber]]});
        break;
      }
      cops = next;
      robber = reply;
      out.transcript.push_back({to_vertices(cops), robber, phi.path[phi.image[robber]]});
    }
  }
  return out;
}

inline GuardSimulation shadow_guard_simulate(const Graph& g, const std::vector<Vertex>& p, int r, const Budget& budget = {}) {
  return shadow_guard_simulate(g, std::span<const Vertex>(p), r, budget);
}

// ---------------------------------------------------------------------------
// Deterministic strategies and exact certification

struct StrategyMove {
  std::vector<Vertex> cops;
  std::vector<int> memory;
};

/// A deterministic cop rule: cop i's next vertex as a function of the ordered
/// cop positions, the robber's vertex and an integer memory vector.
class CopStrategy {
 public:
  virtual ~CopStrategy() = default;
  virtual std::vector<int> initial_memory() const { return {}; }
  virtual StrategyMove move(std::span<const Vertex> cops, Vertex robber, std::span<const int> memory) const = 0;
  virtual nlohmann::json describe() const = 0;
};

/// Cops never move.
class StationaryStrategy final : public CopStrategy {
 public:
  StrategyMove move(std::span<const Vertex> cops, Vertex, std::span<const int> memory) const override {
    return {{cops.begin(), cops.end()}, {memory.begin(), memory.end()}};
  }
  nlohmann::json describe() const override { return {{"kind", "stationary"}}; }
};

/// Lexicographically least optimal move from a solved table.
class TableStrategy final : public CopStrategy {
 public:
  explicit TableStrategy(std::shared_ptr<const SolvedGame> table) : table_(std::move(table)) {}

  StrategyMove move(std::span<const Vertex> cops, Vertex robber, std::span<const int> memory) const override {
    CopConfig sorted(std::vector<Vertex>(cops.begin(), cops.end()));
    auto moves = optimal_moves(*table_, {sorted, robber}, Mover::cops);
    if (moves.empty()) throw StrategyUndefined("table strategy: no move at a terminal state");
    // assign the sorted target multiset back to cop identities: cop i (in
    // sorted order of current position) takes target i when that is legal,
    // otherwise a bipartite matching between cops and targets is used
    const auto& target = moves.front().cops.vector();
    std::vector<Vertex> out(cops.size(), -1);
    std::vector<char> used(target.size(), 0);
    if (!match(cops, target, 0, out, used)) throw StrategyUndefined("table strategy: cannot realize optimal move");
    return {out, {memory.begin(), memory.end()}};
  }

  nlohmann::json describe() const override { return {{"kind", "optimal-table"}, {"cops", table_->cops()}}; }

 private:
  bool match(std::span<const Vertex> cops, const std::vector<Vertex>& target, std::size_t i, std::vector<Vertex>& out,
             std::vector<char>& used) const {
    if (i == cops.size()) return true;
    for (std::size_t t = 0; t < target.size(); ++t) {
      if (used[t] || !table_->graph().in_closed_neighborhood(cops[i], target[t])) continue;
      used[t] = 1;
      out[i] = target[t];
      if (match(cops, target, i + 1, out, used)) return true;
      used[t] = 0;
    }
    return false;
  }

  std::shared_ptr<const SolvedGame> table_;
};

struct TraceStep {
  std::vector<Vertex> cops;
  Vertex robber = 0;
};

struct PlacementCertificate {
  std::vector<Vertex> cops;  // ordered: cop i starts at cops[i]
  std::shared_ptr<const CopStrategy> strategy;
  int claimed_bound = 0;
  bool complete = true;  // false: the construction could not promise claimed_bound
  std::string note;
  std::vector<TraceStep> transcript;  // worst-case play, filled in by certification

  CopConfig placement() const { return CopConfig(cops); }
  int cost() const { return static_cast<int>(cops.size()) + claimed_bound; }
};

struct CertificateCheck {
  bool valid = false;
  std::optional<int> worst_rounds;  // nullopt: the robber evades forever
  std::vector<TraceStep> trace;
};

namespace detail {

struct KeyHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 1)) * 1099511628211ull;
    return h;
  }
};

}  // namespace detail

/// Exact worst case of a deterministic strategy. The cop reply is a function
/// of the visible state, so the robber's best response is a search over robber
/// choices only: a memoized DFS over (cops, robber, memory) states, where a
/// reachable cycle means the robber escapes forever.
inline CertificateCheck certify_strategy(const Graph& g, const std::vector<Vertex>& cops0,
                                         const CopStrategy& strategy, std::optional<int> claimed_bound,
                                         const Budget& budget = {}) {
  const int n = g.order();
  if (cops0.empty()) throw InvalidInput("certify_strategy: empty placement");
  for (Vertex v : cops0) g.check_vertex(v);
  const int k = static_cast<int>(cops0.size());
  StepCounter counter(budget, "certify_strategy");

  using Key = std::vector<int>;
  struct Node {
    Key key;
    std::vector<Vertex> next_cops;
    std::vector<int> next_memory;
    std::vector<Vertex> replies;  // robber replies not landing on a cop
    int value = 1;
    int best_child = -1;
    char state = 0;  // 1 on stack, 2 done
  };
  std::vector<Node> nodes;
  std::unordered_map<Key, int, detail::KeyHash> index;

  auto make_key = [&](std::span<const Vertex> cops, Vertex robber, std::span<const int> memory) {
    Key key(cops.begin(), cops.end());
    key.push_back(robber);
    key.insert(key.end(), memory.begin(), memory.end());
    return key;
  };
  auto expand = [&](int id) {
    Node& node = nodes[id];
    std::span<const int> all(node.key);
    auto cops = all.subspan(0, k);
    Vertex robber = all[k];
    auto memory = all.subspan(k + 1);
    StrategyMove mv = strategy.move(cops, robber, memory);
    Node& again = nodes[id];
    if (static_cast<int>(mv.cops.size()) != k) throw StrategyUndefined("strategy changed the number of cops");
    for (int i = 0; i < k; ++i) {
      if (!g.contains(mv.cops[i]) || !g.in_closed_neighborhood(cops[i], mv.cops[i]))
        throw StrategyUndefined("strategy moved cop " + std::to_string(i) + " illegally from " + std::to_string(cops[i]) +
                                " to " + std::to_string(mv.cops[i]));
    }
    bool captured = std::find(mv.cops.begin(), mv.cops.end(), robber) != mv.cops.end();
    if (!captured) {
      auto consider = [&](Vertex r) {
        if (std::find(mv.cops.begin(), mv.cops.end(), r) == mv.cops.end()) again.replies.push_back(r);
      };
      consider(robber);
      for (Vertex w : g.neighbors(robber)) consider(w);
      std::sort(again.replies.begin(), again.replies.end());
    }
    again.next_cops = std::move(mv.cops);
    again.next_memory = std::move(mv.memory);
  };
  auto intern = [&](Key key) -> std::pair<int, bool> {
    auto it = index.find(key);
    if (it != index.end()) return {it->second, false};
    counter.tick();
    int id = static_cast<int>(nodes.size());
    index.emplace(key, id);
    nodes.emplace_back();
    nodes.back().key = std::move(key);
    return {id, true};
  };

  CertificateCheck out;
  struct Frame {
    int id;
    std::size_t i;
  };
  // returns false if a cycle is reachable
  auto evaluate = [&](int root) -> bool {
    std::vector<Frame> stack{{root, 0}};
    nodes[root].state = 1;
    expand(root);
    while (!stack.empty()) {
      Frame& f = stack.back();
      Node& node = nodes[f.id];
      if (f.i < node.replies.size()) {
        Key child_key = make_key(node.next_cops, node.replies[f.i], node.next_memory);
        auto [child, fresh] = intern(std::move(child_key));
        Node& cur = nodes[stack.back().id];
        if (fresh) {
          nodes[child].state = 1;
          stack.push_back({child, 0});
          expand(child);
          continue;
        }
        if (nodes[child].state == 1) return false;
        if (1 + nodes[child].value > cur.value) {
          cur.value = 1 + nodes[child].value;
          cur.best_child = child;
        }
        ++stack.back().i;
        continue;
      }
      node.state = 2;
      int done = f.id;
      stack.pop_back();
      if (!stack.empty()) {
        Node& parent = nodes[stack.back().id];
        if (1 + nodes[done].value > parent.value) {
          parent.value = 1 + nodes[done].value;
          parent.best_child = done;
        }
        ++stack.back().i;
      }
    }
    return true;
  };

  std::vector<int> memory0 = strategy.initial_memory();
  int worst = 0, worst_root = -1;
  for (Vertex r = 0; r < n; ++r) {
    if (std::find(cops0.begin(), cops0.end(), r) != cops0.end()) continue;
    auto [id, fresh] = intern(make_key(cops0, r, memory0));
    if (fresh && !evaluate(id)) {
      out.valid = false;
      out.worst_rounds = std::nullopt;
      // robber sits in the cycle: report the path down the DFS stack
      out.trace.push_back({cops0, r});
      return out;
    }
    if (nodes[id].value > worst) {
      worst = nodes[id].value;
      worst_root = id;
    }
  }
  out.worst_rounds = worst;
  out.valid = !claimed_bound || worst <= *claimed_bound;
  if (worst_root < 0) {
    out.trace.push_back({cops0, cops0.front()});
    return out;
  }
  for (int id = worst_root; id >= 0; id = nodes[id].best_child) {
    const Node& node = nodes[id];
    out.trace.push_back({std::vector<Vertex>(node.key.begin(), node.key.begin() + k), node.key[k]});
    if (node.best_child < 0) out.trace.push_back({node.next_cops, node.key[k]});
  }
  return out;
}

/// Validates a certificate and stores the worst-case transcript in it.
inline CertificateCheck certify_strategy(const Graph& g, PlacementCertificate& cert, const Budget& budget = {}) {
  if (!cert.strategy) throw InvalidInput("certify_strategy: certificate has no strategy");
  CertificateCheck check = certify_strategy(g, cert.cops, *cert.strategy, cert.claimed_bound, budget);
  cert.transcript = check.trace;
  return check;
}

// ---------------------------------------------------------------------------
// Staged guarding strategies

enum class ObjectKind { path, star, retract };

inline std::string to_string(ObjectKind k) {
  switch (k) {
    case ObjectKind::path: return "path";
    case ObjectKind::star: return "star";
    case ObjectKind::retract: return "retract";
  }
  return "?";
}

/// A subgraph guarded by a group of cops. The shadow map sends every vertex of
/// the host component onto the object (-1 elsewhere).
struct GuardObject {
  ObjectKind kind = ObjectKind::star;
  std::vector<Vertex> vertices;  // removed from the residual graph, sorted
  std::vector<int> cops;         // cop ids
  int bound = 0;                 // rounds to guard once the stage starts
  std::vector<Vertex> path;      // path objects: ordered path
  std::vector<int> path_index;   // path objects: vertex -> index on path, -1 off path
  std::vector<Vertex> shadow;    // vertex -> image, -1 outside the host component
  std::vector<Vertex> chase;     // retract objects: chase[c * n + s] = next cop vertex
};

struct Stage {
  std::vector<GuardObject> objects;
  int bound = 0;
};

/// Reserve sweep after all stages: the robber is stuck in one component of the
/// residual graph; reserve cops walk to a dominating set of it.
struct ReserveSweep {
  std::vector<int> cops;                     // reserve cop ids
  std::vector<int> component;                // vertex -> leftover component id, -1 if none
  std::vector<std::vector<Vertex>> targets;  // per component: dominating set
  int bound = 0;                             // walk length + 1
};

class StagedStrategy final : public CopStrategy {
 public:
  StagedStrategy(const Graph& g, std::vector<Stage> stages, ReserveSweep sweep)
      : g_(g), stages_(std::move(stages)), sweep_(std::move(sweep)), dist_(distance_matrix(g)) {
    for (auto& s : stages_)
      for (auto& o : s.objects) {
        keeper_slot_.push_back(static_cast<int>(flat_.size()));
        flat_.push_back(&o);
      }
  }

  StagedStrategy(const StagedStrategy&) = delete;
  StagedStrategy& operator=(const StagedStrategy&) = delete;

  const std::vector<Stage>& stages() const noexcept { return stages_; }
  const ReserveSweep& sweep() const noexcept { return sweep_; }

  /// memory[0] = active stage; memory[1 + i] = guarding cop of object i or -1
  std::vector<int> initial_memory() const override {
    std::vector<int> mem(1 + flat_.size(), -1);
    mem[0] = 0;
    return mem;
  }

  StrategyMove move(std::span<const Vertex> cops, Vertex robber, std::span<const int> memory) const override {
    if (memory.size() != 1 + flat_.size()) throw StrategyUndefined("staged strategy: bad memory layout");
    std::vector<Vertex> next(cops.begin(), cops.end());
    std::vector<int> mem(memory.begin(), memory.end());
    int active = mem[0];
    while (active < static_cast<int>(stages_.size()) && stage_done(active, robber, mem)) ++active;
    mem[0] = active;

    int slot = 0;
    for (int s = 0; s < static_cast<int>(stages_.size()); ++s) {
      for (const auto& obj : stages_[s].objects) {
        int& keeper = mem[1 + slot++];
        if (s > active) continue;
        move_object(obj, cops, robber, keeper, next);
      }
    }
    if (active == static_cast<int>(stages_.size())) sweep_move(cops, robber, next);

    // capture whenever possible
    for (std::size_t i = 0; i < cops.size(); ++i)
      if (g_.in_closed_neighborhood(cops[i], robber)) {
        next[i] = robber;
        break;
      }
    return {next, mem};
  }

  nlohmann::json describe() const override {
    nlohmann::json j;
    j["kind"] = "staged";
    j["stages"] = nlohmann::json::array();
    for (const auto& s : stages_) {
      nlohmann::json st;
      st["bound"] = s.bound;
      st["objects"] = nlohmann::json::array();
      for (const auto& o : s.objects) {
        nlohmann::json oj{{"kind", to_string(o.kind)}, {"vertices", o.vertices}, {"cops", o.cops}, {"bound", o.bound}};
        if (o.kind == ObjectKind::path) oj["path"] = o.path;
        st["objects"].push_back(oj);
      }
      j["stages"].push_back(st);
    }
    nlohmann::json sw;
    sw["cops"] = sweep_.cops;
    sw["targets"] = sweep_.targets;
    sw["bound"] = sweep_.bound;
    j["reserve"] = sw;
    return j;
  }

 private:
  bool object_done(const GuardObject& obj, Vertex robber, int keeper) const {
    if (obj.kind == ObjectKind::star) return true;
    if (obj.shadow[robber] < 0) return true;  // robber cannot reach this object
    return keeper >= 0;
  }

  bool stage_done(int s, Vertex robber, const std::vector<int>& mem) const {
    int slot = 0;
    for (int t = 0; t < s; ++t) slot += static_cast<int>(stages_[t].objects.size());
    for (const auto& obj : stages_[s].objects)
      if (!object_done(obj, robber, mem[1 + slot++])) return false;
    return true;
  }

  void move_object(const GuardObject& obj, std::span<const Vertex> cops, Vertex robber, int& keeper,
                   std::vector<Vertex>& next) const {
    if (obj.kind == ObjectKind::star) return;
    const Vertex s = obj.shadow[robber];
    if (s < 0) return;
    if (obj.kind == ObjectKind::path) {
      const int target = obj.path_index[s];
      if (keeper >= 0) {
        next[keeper] = s;
        return;
      }
      for (int c : obj.cops) {
        int at = obj.path_index[cops[c]];
        if (at < 0) continue;  // a cop displaced by a capture; game is over anyway
        at += (target > at) - (target < at);
        next[c] = obj.path[at];
        if (at == target && keeper < 0) keeper = c;
      }
      return;
    }
    // retract: one cop chases the shadow inside the object
    const int c = obj.cops.front();
    if (keeper >= 0 || cops[c] == s) {
      next[c] = s;
      keeper = c;
      return;
    }
    Vertex to = obj.chase[static_cast<std::size_t>(cops[c]) * g_.order() + s];
    if (to < 0) return;
    next[c] = to;
    if (to == s) keeper = c;
  }

  void sweep_move(std::span<const Vertex> cops, Vertex robber, std::vector<Vertex>& next) const {
    int comp = sweep_.component.empty() ? -1 : sweep_.component[robber];
    if (comp < 0) return;
    const auto& targets = sweep_.targets[comp];
    for (std::size_t i = 0; i < sweep_.cops.size() && i < targets.size(); ++i) {
      int c = sweep_.cops[i];
      Vertex at = cops[c], goal = targets[i];
      if (at == goal) continue;
      int d = dist_[at][goal];
      if (d < 0) continue;
      for (Vertex w : g_.neighbors(at))
        if (dist_[w][goal] == d - 1) {
          next[c] = w;
          break;
        }
    }
  }

  Graph g_;
  std::vector<Stage> stages_;
  ReserveSweep sweep_;
  std::vector<std::vector<int>> dist_;
  std::vector<const GuardObject*> flat_;
  std::vector<int> keeper_slot_;
};

namespace detail {

/// A retraction of the component of `host` (restricted to `alive`) containing
/// `keep` onto host[keep]: identity on keep, edges to edges or single vertices.
/// Tries the fold toward `center` first, then a backtracking search.
inline std::optional<std::vector<Vertex>> find_retraction(const Graph& host, const std::vector<char>& alive,
                                                          const std::vector<Vertex>& keep, Vertex center,
                                                          const Budget& budget) {
  const int n = host.order();
  std::vector<char> in_keep(n, 0);
  for (Vertex v : keep) in_keep[v] = 1;
  // BFS from center within alive vertices
  std::vector<int> dist(n, -1);
  std::vector<Vertex> order{center};
  dist[center] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex w : host.neighbors(order[i]))
      if (alive[w] && dist[w] < 0) {
        dist[w] = dist[order[i]] + 1;
        order.push_back(w);
      }
  auto edge_ok = [&](Vertex a, Vertex b) { return a == b || host.adjacent(a, b); };
  auto valid = [&](const std::vector<Vertex>& phi) {
    for (auto [u, v] : host.edges())
      if (dist[u] >= 0 && dist[v] >= 0 && !edge_ok(phi[u], phi[v])) return false;
    return true;
  };
  std::vector<Vertex> phi(n, -1);
  for (Vertex v : order) {
    if (in_keep[v]) {
      phi[v] = v;
      continue;
    }
    Vertex parent = -1;
    for (Vertex w : host.neighbors(v))
      if (alive[w] && dist[w] == dist[v] - 1) {
        parent = w;
        break;
      }
    phi[v] = parent >= 0 ? phi[parent] : -1;
  }
  bool fold_ok = std::all_of(order.begin(), order.end(), [&](Vertex v) { return phi[v] >= 0; }) && valid(phi);
  if (fold_ok) return phi;

  // backtracking over the outside vertices in BFS order
  std::vector<Vertex> outside;
  for (Vertex v : order)
    if (!in_keep[v]) outside.push_back(v);
  std::fill(phi.begin(), phi.end(), -1);
  for (Vertex v : order)
    if (in_keep[v]) phi[v] = v;
  StepCounter counter(budget, "retraction search");
  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == outside.size()) return true;
    Vertex v = outside[i];
    for (Vertex cand : keep) {
      counter.tick();
      bool ok = true;
      for (Vertex w : host.neighbors(v))
        if (alive[w] && phi[w] >= 0 && !edge_ok(cand, phi[w])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      phi[v] = cand;
      if (assign(i + 1)) return true;
      phi[v] = -1;
    }
    return false;
  };
  if (assign(0)) return phi;
  return std::nullopt;
}

/// Builds a retract object: one cop at `center` guarding host[keep] by chasing
/// the shadow with an optimal single-cop strategy on the object.
inline GuardObject make_retract_object(const Graph& g, const Graph& host, const std::vector<char>& alive,
                                       std::vector<Vertex> keep, Vertex center, int cop, const Budget& budget) {
  std::sort(keep.begin(), keep.end());
  auto phi = find_retraction(host, alive, keep, center, budget);
  if (!phi) throw InvalidInput("no retraction onto the guarded subgraph around vertex " + std::to_string(center));
  GuardObject obj;
  obj.kind = ObjectKind::retract;
  obj.vertices = keep;
  obj.cops = {cop};
  obj.shadow = *phi;
  InducedSubgraph sub = induced_subgraph(host, keep);
  SolvedGame table = solve_game(sub.graph, 1, budget);
  GameValue v = table.placement_value(CopConfig{sub.from_parent[center]});
  if (!v.is_finite()) throw InvalidInput("guarded subgraph around vertex " + std::to_string(center) + " is not cop-win");
  obj.bound = v.rounds();
  const int n = g.order();
  obj.chase.assign(static_cast<std::size_t>(n) * n, -1);
  const int h = sub.graph.order();
  for (Vertex c = 0; c < h; ++c)
    for (Vertex s = 0; s < h; ++s) {
      Vertex to;
      if (c == s) {
        to = c;
      } else {
        auto moves = optimal_moves(table, {CopConfig{c}, s}, Mover::cops);
        to = moves.front().cops.positions()[0];
      }
      obj.chase[static_cast<std::size_t>(sub.to_parent[c]) * n + sub.to_parent[s]] = sub.to_parent[to];
    }
  for (auto [u, v] : sub.graph.edges())
    if (!g.adjacent(sub.to_parent[u], sub.to_parent[v])) throw InvalidInput("guarded subgraph uses edges outside the graph");
  return obj;
}

inline GuardObject make_path_object(const Graph& residual_host, std::vector<Vertex> path, int r, std::vector<int> cop_ids) {
  GuardObject obj;
  obj.kind = ObjectKind::path;
  obj.path = path;
  obj.vertices = path;
  std::sort(obj.vertices.begin(), obj.vertices.end());
  obj.cops = std::move(cop_ids);
  obj.bound = r;
  PathRetraction phi = path_retraction_in_component(residual_host, path);
  obj.path_index.assign(residual_host.order(), -1);
  for (std::size_t i = 0; i < path.size(); ++i) obj.path_index[path[i]] = static_cast<int>(i);
  obj.shadow.assign(residual_host.order(), -1);
  for (Vertex v = 0; v < residual_host.order(); ++v)
    if (phi.image[v] >= 0) obj.shadow[v] = path[phi.image[v]];
  return obj;
}

inline bool covers_every_vertex(const Graph& g, const std::vector<Vertex>& cops) {
  std::vector<char> on(g.order(), 0);
  for (Vertex c : cops) on[c] = 1;
  return std::all_of(on.begin(), on.end(), [](char x) { return x != 0; });
}

/// host graph on all n vertices keeping only edges among alive vertices
inline Graph alive_subgraph(const Graph& g, const std::vector<char>& alive) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (alive[u] && alive[v]) edges.emplace_back(u, v);
  return Graph::from_edges(g.order(), edges, g.name());
}

/// Lowest-id pair (u, v) at distance exactly len in the alive subgraph.
inline std::optional<std::vector<Vertex>> find_geodesic_of_length(const Graph& host, const std::vector<char>& alive, int len) {
  for (Vertex u = 0; u < host.order(); ++u) {
    if (!alive[u]) continue;
    auto dist = bfs(host, u);
    for (Vertex v = 0; v < host.order(); ++v)
      if (alive[v] && dist[v] == len) return geodesic_between(host, u, v);
  }
  return std::nullopt;
}

}  // namespace detail

inline nlohmann::json certificate_to_json(const PlacementCertificate& cert) {
  nlohmann::json j;
  j["placement"] = cert.placement().vector();
  j["cops"] = cert.cops;
  j["claimed_bound"] = cert.claimed_bound;
  j["complete"] = cert.complete;
  if (!cert.note.empty()) j["note"] = cert.note;
  j["strategy"] = cert.strategy ? cert.strategy->describe() : nlohmann::json();
  j["transcript"] = nlohmann::json::array();
  for (const auto& s : cert.transcript) j["transcript"].push_back({{"cops", s.cops}, {"robber", s.robber}});
  return j;
}

struct StagedParams {
  int long_len = 1;
  int guard_r1 = 1;
  int star_deg = 1;
  int mid_len = 1;
  int guard_r2 = 1;
  std::optional<int> reserve;  // reserve cop count; default: enough for every leftover component

  static StagedParams from_lambert(const LambertParams& p) {
    return {p.long_len, p.guard_r1, p.star_deg, p.mid_len, p.guard_r2, std::nullopt};
  }
};

/// Decompose g into guarded geodesics of length long_len, stars of residual
/// degree >= star_deg, geodesics of length mid_len, and leftover components
/// served by reserve cops at a center vertex. Paths are guarded one at a time
/// in removal order; the claimed bound is the sum of guard radii plus the
/// reserve's walk and final step.
inline PlacementCertificate staged_decomposition(const Graph& g, const StagedParams& params, const Budget& budget = {}) {
  const int n = g.order();
  if (n < 1) throw InvalidInput("staged_decomposition: empty graph");
  if (!is_connected(g)) throw InvalidInput("staged_decomposition: graph is disconnected");
  if (params.long_len < 1 || params.guard_r1 < 1 || params.star_deg < 1 || params.mid_len < 1 || params.guard_r2 < 1)
    throw InvalidInput("staged_decomposition: parameters must be positive");
  std::vector<char> alive(n, 1);
  std::vector<Stage> stages;
  std::vector<Vertex> cops;

  auto remove = [&](const std::vector<Vertex>& vs) {
    for (Vertex v : vs) alive[v] = 0;
  };
  auto path_phase = [&](int len, int r) {
    while (true) {
      Graph host = detail::alive_subgraph(g, alive);
      auto path = detail::find_geodesic_of_length(host, alive, len);
      if (!path) return;
      std::vector<int> ids;
      for (int idx : guard_placement(len, r)) {
        ids.push_back(static_cast<int>(cops.size()));
        cops.push_back((*path)[idx - 1]);
      }
      Stage st;
      st.objects.push_back(detail::make_path_object(host, *path, r, ids));
      st.bound = r;
      remove(*path);
      stages.push_back(std::move(st));
    }
  };

  path_phase(params.long_len, params.guard_r1);
  while (true) {
    Graph host = detail::alive_subgraph(g, alive);
    Vertex center = -1;
    for (Vertex v = 0; v < n && center < 0; ++v)
      if (alive[v] && host.degree(v) >= params.star_deg) center = v;
    if (center < 0) break;
    GuardObject obj;
    obj.kind = ObjectKind::star;
    obj.vertices = host.closed_neighborhood(center);
    obj.cops = {static_cast<int>(cops.size())};
    cops.push_back(center);
    Stage st;
    st.objects.push_back(obj);
    remove(obj.vertices);
    stages.push_back(std::move(st));
  }
  path_phase(params.mid_len, params.guard_r2);

  // leftovers
  ReserveSweep sweep;
  std::vector<Vertex> left;
  for (Vertex v = 0; v < n; ++v)
    if (alive[v]) left.push_back(v);
  PlacementCertificate cert;
  int tail = 0;
  if (!left.empty()) {
    InducedSubgraph rest = induced_subgraph(g, left);
    sweep.component.assign(n, -1);
    int need = 0;
    for (const auto& comp : connected_components(rest.graph)) {
      InducedSubgraph part = induced_subgraph(rest.graph, comp);
      auto dom = k_distance_dominating(part.graph, 1, DominationMode::exact, budget);
      std::vector<Vertex> targets;
      for (Vertex d : dom) targets.push_back(rest.to_parent[part.to_parent[d]]);
      for (Vertex v : comp) sweep.component[rest.to_parent[v]] = static_cast<int>(sweep.targets.size());
      sweep.targets.push_back(targets);
      need = std::max(need, static_cast<int>(targets.size()));
    }
    const Vertex center = graph_center(g).vertex;
    int reserve = params.reserve.value_or(need);
    for (int i = 0; i < reserve; ++i) {
      sweep.cops.push_back(static_cast<int>(cops.size()));
      cops.push_back(center);
    }
    auto dist = detail::bfs(g, center);
    int walk = 0;
    for (const auto& t : sweep.targets)
      for (Vertex v : t) walk = std::max(walk, dist[v]);
    sweep.bound = walk + 1;
    tail = sweep.bound;
    if (reserve < need) {
      cert.complete = false;
      cert.note = "reserve of " + std::to_string(reserve) + " cops cannot dominate a leftover component needing " +
                  std::to_string(need);
    }
  }
  if (cops.empty()) throw std::logic_error("staged_decomposition: produced no cops");
  int total = tail;
  for (const auto& s : stages) total += s.bound;
  cert.cops = cops;
  // a robber starting next to a post is caught in round 1, not round 0
  if (total == 0 && !detail::covers_every_vertex(g, cops)) total = 1;
  cert.claimed_bound = total;
  cert.strategy = std::make_shared<StagedStrategy>(g, std::move(stages), std::move(sweep));
  return cert;
}

/// Cops on the given centers each guard the ball of radius `radius` around
/// their vertex in `host` (a spanning subgraph of g the robber is confined to)
/// by chasing the robber's shadow; extra stationary cops sit on `posts`.
inline PlacementCertificate ball_guard_certificate(const Graph& g, const Graph& host, std::span<const Vertex> centers,
                                                   int radius, std::span<const Vertex> posts, const Budget& budget = {}) {
  const int n = g.order();
  if (radius < 0) throw InvalidInput("ball guard: negative radius");
  std::vector<char> alive(n, 1);
  std::vector<char> covered(n, 0);
  PlacementCertificate cert;
  Stage stage;
  for (Vertex p : posts) {
    g.check_vertex(p);
    GuardObject post;
    post.kind = ObjectKind::star;
    post.vertices = {p};
    post.cops = {static_cast<int>(cert.cops.size())};
    cert.cops.push_back(p);
    stage.objects.push_back(post);
    covered[p] = 1;
  }
  for (Vertex c : centers) {
    g.check_vertex(c);
    auto dist = detail::bfs(host, c);
    std::vector<Vertex> ball;
    for (Vertex v = 0; v < n; ++v)
      if (dist[v] != detail::kNoPath && dist[v] <= radius) {
        ball.push_back(v);
        covered[v] = 1;
      }
    stage.objects.push_back(detail::make_retract_object(g, host, alive, ball, c, static_cast<int>(cert.cops.size()), budget));
    cert.cops.push_back(c);
  }
  for (Vertex v = 0; v < n; ++v)
    if (!covered[v]) throw InvalidInput("ball cover: vertex " + std::to_string(v) + " is farther than " +
                                        std::to_string(radius) + " from every cop");
  for (const auto& o : stage.objects) stage.bound = std::max(stage.bound, o.bound);
  cert.claimed_bound = stage.bound == 0 && !detail::covers_every_vertex(g, cert.cops) ? 1 : stage.bound;
  std::vector<Stage> stages;
  stages.push_back(std::move(stage));
  cert.strategy = std::make_shared<StagedStrategy>(g, std::move(stages), ReserveSweep{});
  return cert;
}

struct FeedbackCertificate {
  FeedbackSet feedback;
  int tree_radius = 0;
  std::vector<Vertex> tree_cops;
  PlacementCertificate certificate;
};

/// Stationary cops on a minimum feedback set F; the robber is then confined to
/// the forest G - F. A spanning tree T of g containing every edge of G - F
/// carries a greedy distance-(ceil(sqrt n) - 1) dominating set whose cops
/// guard their T-balls. Cost <= f(G) + ceil(sqrt n) + floor(sqrt n) - 1.
inline FeedbackCertificate feedback_bound(const Graph& g, const Budget& budget = {}) {
  const int n = g.order();
  if (n < 1) throw InvalidInput("feedback_bound: empty graph");
  if (!is_connected(g)) throw InvalidInput("feedback_bound: graph is disconnected");
  FeedbackCertificate out;
  out.feedback = feedback_vertex_number(g, budget);
  std::vector<char> in_f(n, 0);
  for (Vertex v : out.feedback.witness) in_f[v] = 1;
  detail::DisjointSets ds(n);
  std::vector<Edge> tree;
  auto edges = g.edges();
  for (auto [u, v] : edges)
    if (!in_f[u] && !in_f[v] && ds.unite(u, v)) tree.emplace_back(u, v);
  for (auto [u, v] : edges)
    if ((in_f[u] || in_f[v]) && ds.unite(u, v)) tree.emplace_back(u, v);
  Graph t = Graph::from_edges(n, tree, g.name());
  int s = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n)) - 1e-9));
  while (s * s < n) ++s;
  while ((s - 1) * (s - 1) >= n) --s;
  out.tree_radius = std::max(0, s - 1);
  if (out.tree_radius == 0) {
    out.tree_cops = {0};
  } else {
    out.tree_cops = k_distance_dominating(t, out.tree_radius, DominationMode::greedy, budget);
  }
  out.certificate = ball_guard_certificate(g, t, out.tree_cops, out.tree_radius, out.feedback.witness, budget);
  return out;
}

}  // namespace copthrottle
