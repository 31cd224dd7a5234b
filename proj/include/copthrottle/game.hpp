#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "copthrottle/errors.hpp"
#include "copthrottle/graph.hpp"

namespace copthrottle {

/// Capture time: a finite number of rounds, or RobberWins (infinite). Ordered
/// with RobberWins above every finite value.
class GameValue {
 public:
  constexpr GameValue() = default;

  static constexpr GameValue finite(int rounds) {
    if (rounds < 0) throw InvalidInput("GameValue: negative round count");
    GameValue v;
    v.rounds_ = rounds;
    return v;
  }
  static constexpr GameValue robber_wins() { return GameValue{}; }

  constexpr bool is_finite() const noexcept { return rounds_ >= 0; }
  constexpr int rounds() const {
    if (!is_finite()) throw std::logic_error("GameValue: RobberWins has no round count");
    return rounds_;
  }

  /// Finite(t) -> "t", RobberWins -> "inf".
  std::string to_string() const { return is_finite() ? std::to_string(rounds_) : "inf"; }

  /// a + value; RobberWins absorbs.
  constexpr GameValue plus(int a) const { return is_finite() ? finite(rounds_ + a) : *this; }
  /// a * (1 + value); RobberWins absorbs.
  constexpr GameValue product_cost(int a) const { return is_finite() ? finite(a * (1 + rounds_)) : *this; }

  friend constexpr bool operator==(GameValue a, GameValue b) noexcept { return a.rounds_ == b.rounds_; }
  friend constexpr std::strong_ordering operator<=>(GameValue a, GameValue b) noexcept {
    if (a.is_finite() != b.is_finite()) return a.is_finite() ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.rounds_ <=> b.rounds_;
  }

 private:
  int rounds_ = -1;
};

/// Canonical multiset of cop positions (sorted, non-decreasing).
class CopConfig {
 public:
  CopConfig() = default;
  explicit CopConfig(std::vector<Vertex> positions) : positions_(std::move(positions)) {
    std::sort(positions_.begin(), positions_.end());
  }
  CopConfig(std::initializer_list<Vertex> positions) : CopConfig(std::vector<Vertex>(positions)) {}

  std::span<const Vertex> positions() const noexcept { return positions_; }
  const std::vector<Vertex>& vector() const noexcept { return positions_; }
  int size() const noexcept { return static_cast<int>(positions_.size()); }
  bool contains(Vertex v) const noexcept { return std::binary_search(positions_.begin(), positions_.end(), v); }
  bool is_set() const noexcept { return std::adjacent_find(positions_.begin(), positions_.end()) == positions_.end(); }

  void validate(const Graph& g) const {
    if (positions_.empty()) throw InvalidInput("cop configuration must be non-empty");
    for (Vertex v : positions_) g.check_vertex(v);
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < positions_.size(); ++i) out += (i ? " " : "") + std::to_string(positions_[i]);
    return out;
  }

  friend bool operator==(const CopConfig&, const CopConfig&) = default;
  friend auto operator<=>(const CopConfig&, const CopConfig&) = default;

 private:
  std::vector<Vertex> positions_;
};

/// Cops to move next; robber inside the cop multiset means captured.
struct GameState {
  CopConfig cops;
  Vertex robber = 0;
};

/// Lexicographic ranking of size-k multisets over {0..n-1}.
class MultisetIndex {
 public:
  MultisetIndex() = default;
  MultisetIndex(int n, int max_k) : n_(n), max_k_(max_k), cnt_(max_k + 1, std::vector<std::uint64_t>(n + 1, 0)) {
    // cnt_[k][m]: multisets of size k over m symbols
    for (int m = 0; m <= n; ++m) cnt_[0][m] = 1;
    for (int k = 1; k <= max_k; ++k)
      for (int m = 1; m <= n; ++m) {
        unsigned __int128 t = static_cast<unsigned __int128>(cnt_[k - 1][m]) + cnt_[k][m - 1];
        cnt_[k][m] = t > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                                   : static_cast<std::uint64_t>(t);
      }
  }

  std::uint64_t count(int k) const { return cnt_[k][n_]; }

  std::uint64_t rank(std::span<const Vertex> sorted) const {
    int k = static_cast<int>(sorted.size());
    std::uint64_t r = 0;
    int low = 0;
    for (Vertex x : sorted) {
      r += cnt_[k][n_ - low] - cnt_[k][n_ - x];
      low = x;
      --k;
    }
    return r;
  }

  /// Advances `m` to the next multiset in lexicographic order; false at the end.
  bool next(std::vector<Vertex>& m) const {
    int i = static_cast<int>(m.size()) - 1;
    while (i >= 0 && m[i] == n_ - 1) --i;
    if (i < 0) return false;
    Vertex v = m[i] + 1;
    for (std::size_t j = i; j < m.size(); ++j) m[j] = v;
    return true;
  }

  int symbols() const noexcept { return n_; }

 private:
  int n_ = 0;
  int max_k_ = 0;
  std::vector<std::vector<std::uint64_t>> cnt_;
};

/// Number of game states (configs times robber positions) for k cops on n vertices.
inline std::uint64_t game_state_count(int n, int k) {
  std::uint64_t configs = binomial(static_cast<std::uint64_t>(n + k - 1), static_cast<std::uint64_t>(k));
  if (configs == UINT64_MAX || (n > 0 && configs > UINT64_MAX / static_cast<std::uint64_t>(n))) return UINT64_MAX;
  return configs * static_cast<std::uint64_t>(n);
}

/// Full value table for k cops: value(C, r) with cops to move.
class SolvedGame {
 public:
  static constexpr std::uint16_t kRobberWins = std::numeric_limits<std::uint16_t>::max();

  const Graph& graph() const noexcept { return g_; }
  int cops() const noexcept { return k_; }
  std::uint64_t config_count() const noexcept { return configs_; }

  std::uint64_t rank(const CopConfig& c) const {
    if (c.size() != k_) throw InvalidInput("cop configuration size does not match solved table");
    c.validate(g_);
    return index_.rank(c.positions());
  }

  /// All configurations in rank (lexicographic) order.
  std::vector<CopConfig> configs() const {
    std::vector<CopConfig> out;
    out.reserve(configs_);
    std::vector<Vertex> m(k_, 0);
    do out.emplace_back(m);
    while (index_.next(m));
    return out;
  }

  GameValue value(const CopConfig& c, Vertex robber) const {
    g_.check_vertex(robber);
    return decode(values_[rank(c) * n_ + robber]);
  }

  GameValue value_at(std::uint64_t config_rank, Vertex robber) const {
    return decode(values_[config_rank * n_ + robber]);
  }

  /// capt(G; C): worst robber start.
  GameValue placement_value(const CopConfig& c) const { return placement_value_at(rank(c)); }

  GameValue placement_value_at(std::uint64_t config_rank) const {
    std::uint16_t worst = 0;
    for (int r = 0; r < n_; ++r) worst = std::max(worst, values_[config_rank * n_ + r]);
    return decode(worst);
  }

  int max_finite_value() const {
    int best = 0;
    for (auto v : values_)
      if (v != kRobberWins) best = std::max<int>(best, v);
    return best;
  }

 private:
  friend SolvedGame solve_game(const Graph& g, int k, const Budget& budget);

  static GameValue decode(std::uint16_t v) { return v == kRobberWins ? GameValue::robber_wins() : GameValue::finite(v); }

  Graph g_;
  int n_ = 0;
  int k_ = 0;
  std::uint64_t configs_ = 0;
  MultisetIndex index_;
  std::vector<std::uint16_t> values_;
};

/// Retrograde solution of the k-cop game on g.
///
/// Layer t marks every cops-to-move state whose value is t: some cop move C'
/// either lands on the robber or leaves every robber reply r' in C' or in a
/// state already resolved at value <= t-1. Layers stop at the first empty one;
/// unresolved states are RobberWins.
///
/// Robber positions are packed into bitmasks, and the existential cop move is
/// evaluated one cop at a time: F(U, M) over (unmoved, moved) multiset pairs,
/// so the work per layer is linear in the number of such pairs instead of
/// exponential in k.
inline SolvedGame solve_game(const Graph& g, int k, const Budget& budget = {}) {
  const int n = g.order();
  if (k < 1) throw InvalidInput("solve_game: need at least one cop");
  if (n < 1) throw InvalidInput("solve_game: empty graph");
  const std::uint64_t states = game_state_count(n, k);
  budget.require(states, "solve_game(k=" + std::to_string(k) + ", n=" + std::to_string(n) + ") state space");
  if (n > 0 && k > 0 && n + k > 4096) throw BudgetExceeded("solve_game: instance too large", states, budget.limit);

  SolvedGame out;
  out.g_ = g;
  out.n_ = n;
  out.k_ = k;
  out.index_ = MultisetIndex(n, k);
  const MultisetIndex& idx = out.index_;
  out.configs_ = idx.count(k);
  const std::uint64_t configs = out.configs_;

  // DP storage: level j holds pairs (U of size k-j, M of size j)
  std::uint64_t dp_cells = 0;
  for (int j = 0; j <= k; ++j) dp_cells += idx.count(k - j) * idx.count(j);
  const int words = (n + 63) / 64;
  budget.require(dp_cells * static_cast<std::uint64_t>(words), "solve_game move-evaluation table");

  out.values_.assign(configs * n, SolvedGame::kRobberWins);

  using Word = std::uint64_t;
  auto set_bit = [](Word* m, int b) { m[b >> 6] |= Word{1} << (b & 63); };

  std::vector<Word> closed(static_cast<std::size_t>(n) * words, 0);
  for (Vertex v = 0; v < n; ++v) {
    set_bit(&closed[v * words], v);
    for (Vertex w : g.neighbors(v)) set_bit(&closed[v * words], w);
  }

  // per size s: all multisets, first element, rank of the tail, and insertion ranks
  std::vector<std::vector<Vertex>> first(k + 1), all_configs;
  std::vector<std::vector<std::uint64_t>> tail_rank(k + 1);
  std::vector<std::vector<std::uint64_t>> insert_rank(k);  // insert_rank[j][rankM*n + x] = rank(M + x)
  for (int s = 0; s <= k; ++s) {
    std::vector<Vertex> m(s, 0);
    std::vector<Vertex> scratch;
    do {
      if (s > 0) {
        first[s].push_back(m[0]);
        tail_rank[s].push_back(idx.rank(std::span<const Vertex>(m).subspan(1)));
      }
      if (s < k) {
        for (Vertex x = 0; x < n; ++x) {
          scratch = m;
          scratch.insert(std::upper_bound(scratch.begin(), scratch.end(), x), x);
          insert_rank[s].push_back(idx.rank(scratch));
        }
      }
      if (s == k) all_configs.push_back(m);
    } while (s > 0 && idx.next(m));
  }

  std::vector<Word> occupied(configs * words, 0), resolved(configs * words, 0);
  for (std::uint64_t c = 0; c < configs; ++c)
    for (Vertex v : all_configs[c]) {
      set_bit(&occupied[c * words], v);
      set_bit(&resolved[c * words], v);
      out.values_[c * n + v] = 0;
    }

  std::vector<std::vector<Word>> level(k + 1);
  for (int j = 0; j <= k; ++j) level[j].assign(idx.count(k - j) * idx.count(j) * words, 0);

  for (int t = 1;; ++t) {
    if (t >= SolvedGame::kRobberWins) throw BudgetExceeded("solve_game: round counter overflow", t, SolvedGame::kRobberWins);
    // robber to move after cops reached C': robber at r is lost if r is on a cop
    // or every reply lands in a resolved state
    std::vector<Word>& top = level[k];
    for (std::uint64_t c = 0; c < configs; ++c) {
      Word* out_mask = &top[c * words];
      const Word* res = &resolved[c * words];
      const Word* occ = &occupied[c * words];
      for (int w = 0; w < words; ++w) out_mask[w] = occ[w];
      for (Vertex r = 0; r < n; ++r) {
        const Word* nb = &closed[r * words];
        bool trapped = true;
        for (int w = 0; w < words && trapped; ++w) trapped = (nb[w] & ~res[w]) == 0;
        if (trapped) set_bit(out_mask, r);
      }
    }
    for (int j = k - 1; j >= 0; --j) {
      const int s = k - j;
      const std::uint64_t moved_count = idx.count(j);
      const std::uint64_t next_moved_count = idx.count(j + 1);
      const std::vector<Word>& next = level[j + 1];
      std::vector<Word>& cur = level[j];
      for (std::uint64_t u = 0; u < idx.count(s); ++u) {
        const Vertex mover = first[s][u];
        const std::uint64_t base = tail_rank[s][u] * next_moved_count;
        auto nbrs = g.neighbors(mover);
        for (std::uint64_t m = 0; m < moved_count; ++m) {
          Word* dst = &cur[(u * moved_count + m) * words];
          const std::uint64_t* ins = &insert_rank[j][m * n];
          const Word* src = &next[(base + ins[mover]) * words];
          for (int w = 0; w < words; ++w) dst[w] = src[w];
          for (Vertex x : nbrs) {
            src = &next[(base + ins[x]) * words];
            for (int w = 0; w < words; ++w) dst[w] |= src[w];
          }
        }
      }
    }
    bool progress = false;
    const std::vector<Word>& can_win = level[0];
    for (std::uint64_t c = 0; c < configs; ++c) {
      for (int w = 0; w < words; ++w) {
        Word fresh = can_win[c * words + w] & ~resolved[c * words + w];
        if (!fresh) continue;
        progress = true;
        resolved[c * words + w] |= fresh;
        while (fresh) {
          int b = __builtin_ctzll(fresh);
          fresh &= fresh - 1;
          out.values_[c * n + w * 64 + b] = static_cast<std::uint16_t>(t);
        }
      }
    }
    if (!progress) break;
  }
  return out;
}

struct PlacementSolution {
  GameValue value;
  SolvedGame table;
};

/// capt(G; S) together with the full table for |S| cops.
inline PlacementSolution solve_placement(const Graph& g, const CopConfig& s, const Budget& budget = {}) {
  s.validate(g);
  SolvedGame table = solve_game(g, s.size(), budget);
  GameValue v = table.placement_value(s);
  return {v, std::move(table)};
}

struct CaptOptions {
  /// Minimize over sets only (no repeated vertices) instead of multisets.
  bool sets_only = false;
};

struct CaptResult {
  GameValue value;
  CopConfig witness;
};

/// Best placement value over a solved table, lexicographically least witness.
inline CaptResult best_placement(const SolvedGame& table, CaptOptions options = {}) {
  CaptResult best{GameValue::robber_wins(), {}};
  bool have = false;
  std::uint64_t r = 0;
  for (const CopConfig& c : table.configs()) {
    if (!options.sets_only || c.is_set()) {
      GameValue v = table.placement_value_at(r);
      if (!have || v < best.value) {
        best = {v, c};
        have = true;
      }
    }
    ++r;
  }
  return best;
}

/// capt_k(G): min over size-k placements; RobberWins iff k < c(G).
inline CaptResult capt_k(const Graph& g, int k, const Budget& budget = {}, CaptOptions options = {}) {
  if (options.sets_only && k > g.order()) throw InvalidInput("capt_k: sets-only mode needs k <= n");
  return best_placement(solve_game(g, k, budget), options);
}

/// c(G). Disconnected graphs sum their components' cop numbers.
inline int cop_number(const Graph& g, const Budget& budget = {}) {
  if (g.order() == 0) throw InvalidInput("cop_number: empty graph");
  auto components = connected_components(g);
  if (components.size() > 1) {
    int total = 0;
    for (const auto& comp : components) total += cop_number(induced_subgraph(g, comp).graph, budget);
    return total;
  }
  for (int k = 1;; ++k) {
    if (capt_k(g, k, budget).value.is_finite()) return k;
  }
}

enum class Mover { cops, robber };

/// One optimal move with the continuation value it guarantees.
struct ScoredMove {
  CopConfig cops;      // cop positions after the move
  Vertex robber = 0;   // robber position after the move
  GameValue value;     // remaining value after this move
};

namespace detail {

inline void product_moves(const Graph& g, std::span<const Vertex> cops, std::size_t i, std::vector<Vertex>& cur,
                          std::vector<CopConfig>& out) {
  if (i == cops.size()) {
    out.emplace_back(cur);
    return;
  }
  cur.push_back(cops[i]);
  product_moves(g, cops, i + 1, cur, out);
  cur.pop_back();
  for (Vertex w : g.neighbors(cops[i])) {
    cur.push_back(w);
    product_moves(g, cops, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// All canonical cop successors of c, sorted and deduplicated.
inline std::vector<CopConfig> cop_moves(const Graph& g, const CopConfig& c) {
  std::vector<CopConfig> out;
  std::vector<Vertex> cur;
  detail::product_moves(g, c.positions(), 0, cur, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Robber-to-move value at (cops, robber): 0 if caught, else the best reply.
inline GameValue robber_to_move_value(const SolvedGame& table, const CopConfig& cops, Vertex robber) {
  if (cops.contains(robber)) return GameValue::finite(0);
  GameValue worst = GameValue::finite(0);
  const Graph& g = table.graph();
  auto consider = [&](Vertex r) {
    GameValue v = cops.contains(r) ? GameValue::finite(0) : table.value(cops, r);
    worst = std::max(worst, v);
  };
  consider(robber);
  for (Vertex r : g.neighbors(robber)) consider(r);
  return worst;
}

/// Optimal moves from a solved table, lexicographically ordered. For cops the
/// state is cops-to-move; for the robber the given cops have just moved.
/// Terminal states (robber on a cop) have no moves.
inline std::vector<ScoredMove> optimal_moves(const SolvedGame& table, const GameState& state, Mover mover) {
  const Graph& g = table.graph();
  g.check_vertex(state.robber);
  if (state.cops.size() != table.cops()) throw InvalidInput("optimal_moves: state not present in table (cop count)");
  state.cops.validate(g);
  if (state.cops.contains(state.robber)) return {};
  std::vector<ScoredMove> scored;
  if (mover == Mover::cops) {
    for (CopConfig& next : cop_moves(g, state.cops)) {
      GameValue v = robber_to_move_value(table, next, state.robber);
      scored.push_back({std::move(next), state.robber, v});
    }
  } else {
    std::vector<Vertex> replies{state.robber};
    for (Vertex r : g.neighbors(state.robber)) replies.push_back(r);
    std::sort(replies.begin(), replies.end());
    for (Vertex r : replies) {
      GameValue v = state.cops.contains(r) ? GameValue::finite(0) : table.value(state.cops, r);
      scored.push_back({state.cops, r, v});
    }
  }
  if (scored.empty()) return {};
  GameValue target = scored.front().value;
  for (const auto& s : scored)
    target = mover == Mover::cops ? std::min(target, s.value) : std::max(target, s.value);
  std::vector<ScoredMove> out;
  for (auto& s : scored)
    if (s.value == target) out.push_back(std::move(s));
  return out;
}

}  // namespace copthrottle
