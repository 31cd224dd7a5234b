#include <gtest/gtest.h>

#include <set>

#include "copthrottle/copthrottle.hpp"
#include "oracles.hpp"

using namespace copthrottle;

namespace {

std::vector<Graph> tiny_graphs(int count, std::uint64_t seed) {
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    Rng rng(seed * 1000 + static_cast<std::uint64_t>(i));
    int n = 1 + static_cast<int>(rng.below(6));
    std::vector<Edge> e;
    int den = 2 + static_cast<int>(rng.below(3));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.below(den) == 0) e.emplace_back(u, v);
    out.push_back(Graph::from_edges(n, e));
  }
  out.push_back(cycle_graph(4));
  out.push_back(cycle_graph(5));
  out.push_back(path_graph(6));
  out.push_back(complete_bipartite(2, 3));
  return out;
}

std::optional<int> as_optional(GameValue v) {
  return v.is_finite() ? std::optional<int>(v.rounds()) : std::nullopt;
}

}  // namespace

TEST(GameValue, OrderingAndArithmetic) {
  EXPECT_LT(GameValue::finite(3), GameValue::robber_wins());
  EXPECT_EQ(GameValue::finite(2).plus(3), GameValue::finite(5));
  EXPECT_EQ(GameValue::finite(2).product_cost(3), GameValue::finite(9));
  EXPECT_FALSE(GameValue::robber_wins().plus(1).is_finite());
  EXPECT_EQ(GameValue::robber_wins().to_string(), "inf");
}

TEST(MultisetIndex, RankIsBijective) {
  MultisetIndex idx(6, 3);
  std::set<std::uint64_t> seen;
  std::uint64_t count = 0;
  for (int a = 0; a < 6; ++a)
    for (int b = a; b < 6; ++b)
      for (int c = b; c < 6; ++c) {
        auto r = idx.rank(CopConfig{a, b, c}.positions());
        EXPECT_LT(r, idx.count(3));
        seen.insert(r);
        ++count;
      }
  EXPECT_EQ(seen.size(), count);
  EXPECT_EQ(idx.count(3), 56u);  // C(6+3-1, 3)
}

TEST(Engine, AgreesWithMinimaxOracle) {
  for (const Graph& g : tiny_graphs(80, 1)) {
    const int n = g.order();
    for (int k = 1; k <= 2; ++k) {
      SolvedGame table = solve_game(g, k);
      oracle::Minimax mm(g, k, 2 * n);
      for (const CopConfig& c : table.configs())
        for (Vertex r = 0; r < n; ++r) {
          auto want = mm.value(c.vector(), r);
          EXPECT_EQ(as_optional(table.value(c, r)), want)
              << graph_to_json(g).dump() << " k=" << k << " cops {" << c.to_string() << "} robber " << r;
        }
      EXPECT_EQ(as_optional(capt_k(g, k).value), mm.capt()) << graph_to_json(g).dump();
    }
  }
}

TEST(Engine, KnownCaptureTimes) {
  EXPECT_EQ(capt_k(path_graph(5), 1).value, GameValue::finite(2));
  EXPECT_EQ(capt_k(complete_graph(5), 1).value, GameValue::finite(1));
  EXPECT_EQ(capt_k(empty_graph(1), 1).value, GameValue::finite(0));
  EXPECT_FALSE(capt_k(cycle_graph(4), 1).value.is_finite());
  EXPECT_EQ(capt_k(cycle_graph(4), 2).value, GameValue::finite(1));
  EXPECT_EQ(cop_number(petersen_graph()), 3);
  EXPECT_EQ(cop_number(disjoint_union(cycle_graph(4), path_graph(3))), 3);
}

TEST(Engine, PlacementValueIsMaxOverRobberStarts) {
  Graph g = grid_graph(2, 3);
  SolvedGame t = solve_game(g, 2);
  for (const CopConfig& c : t.configs()) {
    GameValue worst = GameValue::finite(0);
    for (Vertex r = 0; r < g.order(); ++r) worst = std::max(worst, c.contains(r) ? GameValue::finite(0) : t.value(c, r));
    EXPECT_EQ(t.placement_value(c), worst);
  }
}

TEST(Engine, MoreCopsNeverHurt) {
  for (const Graph& g : tiny_graphs(40, 2)) {
    GameValue prev = GameValue::robber_wins();
    for (int k = 1; k <= std::min(3, g.order()); ++k) {
      GameValue v = capt_k(g, k).value;
      EXPECT_LE(v, prev);
      prev = v;
    }
  }
}

TEST(Engine, SetsOnlyNeverBeatsMultisets) {
  for (const Graph& g : tiny_graphs(40, 3)) {
    for (int k = 1; k <= std::min(3, g.order()); ++k) {
      GameValue multi = capt_k(g, k).value;
      GameValue sets = capt_k(g, k, {}, {true}).value;
      EXPECT_LE(multi, sets);
    }
  }
}

TEST(Engine, SolvePlacementMatchesTable) {
  Graph g = petersen_graph();
  SolvedGame t = solve_game(g, 3);
  CopConfig c{0, 1, 2};
  EXPECT_EQ(solve_placement(g, c).value, t.placement_value(c));
}

TEST(Engine, BudgetExceededIsReported) {
  EXPECT_THROW(solve_game(petersen_graph(), 4, Budget{1000}), BudgetExceeded);
  try {
    solve_game(path_graph(30), 3, Budget{100});
    FAIL();
  } catch (const BudgetExceeded& e) {
    EXPECT_GT(e.required(), e.limit());
  }
}

TEST(Engine, OptimalMovesRealizeTheValue) {
  Graph g = m_ell_prime(1);
  SolvedGame t = solve_game(g, 2);
  for (const CopConfig& c : t.configs())
    for (Vertex r = 0; r < g.order(); ++r) {
      if (c.contains(r)) continue;
      GameValue v = t.value(c, r);
      auto moves = optimal_moves(t, {c, r}, Mover::cops);
      ASSERT_FALSE(moves.empty());
      EXPECT_EQ(moves.front().value.plus(1), v);
      for (const auto& m : moves) EXPECT_EQ(m.value, moves.front().value);
    }
}

TEST(Engine, RejectsBadInput) {
  EXPECT_THROW(solve_game(path_graph(3), 0), InvalidInput);
  EXPECT_THROW(CopConfig({7}).validate(path_graph(3)), InvalidInput);
  SolvedGame t = solve_game(path_graph(3), 1);
  EXPECT_THROW(optimal_moves(t, {CopConfig{0, 1}, 2}, Mover::cops), InvalidInput);
}
