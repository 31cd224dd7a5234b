#include <gtest/gtest.h>

#include <cmath>
#include <fstream>

#include "copthrottle/copthrottle.hpp"
#include "oracles.hpp"

using namespace copthrottle;

namespace {

Graph three_sun() {
  std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 5}, {3, 4}, {3, 5}};
  return Graph::from_edges(6, e, "3-sun");
}

}  // namespace

TEST(LexBfs, RecognitionMatchesInducedCycleOracle) {
  std::ifstream in(COPTHROTTLE_TEST_DATA "/connected_le7.g6");
  int chordal = 0;
  for (const Graph& g : read_graph6_file(in)) {
    EliminationOrdering e = lexbfs_order(g);
    EXPECT_EQ(e.chordal, oracle::chordal_by_cycles(g)) << graph_to_json(g).dump();
    chordal += e.chordal;
    if (!e.chordal) {
      // witness is an induced cycle of length >= 4
      const auto& c = e.induced_cycle;
      ASSERT_GE(c.size(), 4u);
      for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) {
          bool consecutive = j == i + 1 || (i == 0 && j + 1 == c.size());
          EXPECT_EQ(g.adjacent(c[i], c[j]), consecutive);
        }
    }
  }
  EXPECT_EQ(chordal, 354);  // networkx is_chordal count on the same corpus
}

TEST(LexBfs, PerfectEliminationProperty) {
  for (int i = 0; i < 50; ++i) {
    Graph g = random_chordal(3 + i % 12, 40 + i);
    EliminationOrdering e = lexbfs_order(g);
    ASSERT_TRUE(e.chordal);
    std::vector<int> pos(g.order());
    for (int j = 0; j < g.order(); ++j) pos[e.elimination[j]] = j;
    for (Vertex v : e.elimination) {
      std::vector<Vertex> later;
      for (Vertex w : g.neighbors(v))
        if (pos[w] > pos[v]) later.push_back(w);
      for (std::size_t a = 0; a < later.size(); ++a)
        for (std::size_t b = a + 1; b < later.size(); ++b) EXPECT_TRUE(g.adjacent(later[a], later[b]));
    }
  }
}

TEST(CliqueDecomposition, RunningIntersection) {
  for (int i = 0; i < 50; ++i) {
    Graph g = random_chordal(2 + i % 12, 70 + i);
    CliqueDecomposition d = clique_decomposition(g);
    EXPECT_EQ(clique_decomposition_violation(g, d), "");
  }
  CliqueDecomposition k4 = clique_decomposition(complete_graph(4));
  ASSERT_EQ(k4.cliques.size(), 1u);
  EXPECT_EQ(k4.cliques[0], (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_THROW(clique_decomposition(cycle_graph(4)), InvalidInput);
}

TEST(ChordalCapture, TreesCaptureInMaxDistance) {
  for (int i = 0; i < 30; ++i) {
    Graph t = random_tree(3 + i % 9, 300 + i);
    SolvedGame one = solve_game(t, 1), two = solve_game(t, 2);
    for (const CopConfig& c : one.configs()) EXPECT_EQ(one.placement_value(c), chordal_capture_fast(t, c));
    for (const CopConfig& c : two.configs()) EXPECT_EQ(two.placement_value(c), chordal_capture_fast(t, c));
  }
}

TEST(ChordalCapture, MaxDistanceIsALowerBound) {
  for (int i = 0; i < 40; ++i) {
    Graph g = random_chordal(3 + i % 8, 500 + i);
    SolvedGame t = solve_game(g, 2);
    for (const CopConfig& c : t.configs()) EXPECT_LE(chordal_capture_fast(g, c), t.placement_value(c));
  }
}

TEST(ChordalCapture, ThreeSunBreaksTheMaxDistanceIdentity) {
  // a cop on ear 4 is within 2 of everything, but the robber on 1 survives 3 rounds
  Graph sun = three_sun();
  ASSERT_TRUE(oracle::chordal_by_cycles(sun));
  EXPECT_EQ(oracle::max_distance(sun, {4}), 2);
  oracle::Minimax mm(sun, 1, 12);
  EXPECT_EQ(mm.placement({4}), 3);
  EXPECT_EQ(chordal_capture_fast(sun, CopConfig{4}), GameValue::finite(2));
  EXPECT_EQ(solve_placement(sun, CopConfig{4}).value, GameValue::finite(3));
}

TEST(ChordalCapture, KCaptureEqualsKRadius) {
  for (int i = 0; i < 60; ++i) {
    Graph g = random_chordal(2 + i % 10, 800 + i);
    for (int k = 1; k <= std::min(3, g.order()); ++k) {
      EXPECT_EQ(capt_k(g, k, {}, {true}).value, GameValue::finite(oracle::k_radius(g, k)))
          << graph_to_json(g).dump() << " k=" << k;
    }
  }
}

TEST(ChordalThrottling, ProductIsOnePlusRadius) {
  for (int i = 0; i < 60; ++i) {
    Graph g = random_chordal(2 + i % 11, 1100 + i);
    ChordalThrottling ct = chordal_throttling(g);
    EXPECT_EQ(ct.th_prod, 1 + graph_center(g).radius);
    EXPECT_EQ(throttling_report(g).th_prod, ct.th_prod) << graph_to_json(g).dump();
  }
}

TEST(ChordalThrottling, SqrtBound) {
  for (int n : {1, 2, 5, 16, 17, 40}) {
    Graph p = path_graph(n);
    ChordalThrottling ct = chordal_throttling(p);
    int fl = static_cast<int>(std::floor(std::sqrt(n)));
    int ce = fl * fl == n ? fl : fl + 1;
    EXPECT_LE(ct.th_sum, ce + fl - 1);
  }
}

TEST(ChordalThrottling, RejectsNonChordal) {
  EXPECT_THROW(chordal_throttling(cycle_graph(5)), InvalidInput);
  EXPECT_THROW(chordal_capture_fast(disjoint_union(path_graph(2), path_graph(2)), CopConfig{0}), InvalidInput);
}

TEST(CornerElimination, GeodesicReachedByCornerDeletions) {
  for (int i = 0; i < 30; ++i) {
    Graph g = random_chordal(4 + i % 9, 1400 + i);
    Vertex a = 0, b = 0;
    int best = -1;
    auto dm = distance_matrix(g);
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = 0; v < g.order(); ++v)
        if (dm[u][v] > best) best = dm[u][v], a = u, b = v;
    auto p = geodesic_between(g, a, b);
    auto seq = corner_elimination_sequence(g, p);
    EXPECT_EQ(seq.size() + p.size(), static_cast<std::size_t>(g.order()));
    std::vector<char> alive(g.order(), 1);
    for (const auto& step : seq) {
      ASSERT_TRUE(alive[step.corner] && alive[step.dominator]);
      for (Vertex w : g.neighbors(step.corner))
        if (alive[w]) EXPECT_TRUE(w == step.dominator || g.adjacent(w, step.dominator));
      alive[step.corner] = 0;
    }
  }
}

TEST(BallCover, CertificateIsSound) {
  Graph g = path_graph(9);
  PlacementCertificate cert = ball_cover_strategy(g, CopConfig{2, 6}, 2);
  CertificateCheck chk = certify_strategy(g, cert);
  EXPECT_TRUE(chk.valid);
  EXPECT_LE(solve_placement(g, cert.placement()).value, GameValue::finite(cert.claimed_bound));
  // on the 3-sun the ball around an ear needs its exact one-cop time
  Graph sun = three_sun();
  PlacementCertificate ear = ball_cover_strategy(sun, CopConfig{4}, 2);
  EXPECT_EQ(ear.claimed_bound, 3);
  EXPECT_TRUE(certify_strategy(sun, ear).valid);
}
