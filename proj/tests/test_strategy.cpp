#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "copthrottle/copthrottle.hpp"
#include "oracles.hpp"

using namespace copthrottle;

namespace {

std::vector<Vertex> iota_path(int len) {
  std::vector<Vertex> p(len);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

TEST(GuardPlacement, FormulaAndCoverage) {
  // 1-based positions r+1+(2r+1)j, capped at k+1
  EXPECT_EQ(guard_placement(10, 2), (std::vector<int>{3, 8, 11}));
  EXPECT_EQ(guard_placement(0, 3), (std::vector<int>{1}));
  for (int k = 0; k <= 30; ++k)
    for (int r = 1; r <= 5; ++r) {
      auto pos = guard_placement(k, r);
      EXPECT_EQ(static_cast<int>(pos.size()), (k + 1 + 2 * r) / (2 * r + 1));
      for (int i = 1; i <= k + 1; ++i) {
        int best = 1 << 20;
        for (int c : pos) best = std::min(best, std::abs(c - i));
        EXPECT_LE(best, r);
      }
    }
}

TEST(GuardPlacement, OneFewerCopCannotCover) {
  // every set of |pos|-1 indices leaves some index farther than r
  for (int k = 0; k <= 14; ++k)
    for (int r = 1; r <= 3; ++r) {
      int m = static_cast<int>(guard_placement(k, r).size()) - 1;
      if (m <= 0) continue;
      bool covered = false;
      oracle::subsets(k + 1, m, [&](const std::vector<int>& s) {
        covered = oracle::max_distance(path_graph(k + 1), s) <= r;
        return !covered;
      });
      EXPECT_FALSE(covered) << "k=" << k << " r=" << r;
    }
}

TEST(ShadowGuard, GuardsPathsWithinR) {
  for (int k = 1; k <= 20; ++k)
    for (int r = 1; r <= 4; ++r) {
      auto sim = shadow_guard_simulate(path_graph(k + 1), iota_path(k + 1), r);
      ASSERT_TRUE(sim.rounds_to_guard.has_value());
      EXPECT_LE(*sim.rounds_to_guard, r);
    }
}

TEST(ShadowGuard, AllCopsStepTowardTheShadow) {
  // path 0..9, r = 2: cops at indices 2 and 7 (1-based 3 and 8). A shadow
  // starting at index 4 is caught within 2 rounds only if both cops chase it.
  auto sim = shadow_guard_simulate(path_graph(10), iota_path(10), 2);
  ASSERT_TRUE(sim.rounds_to_guard.has_value());
  EXPECT_LE(*sim.rounds_to_guard, 2);
}

TEST(ShadowGuard, ConnectedHostAndGeodesicRequired) {
  Graph comb = attach_leaves(path_graph(6));
  auto sim = shadow_guard_simulate(comb, iota_path(6), 1);
  ASSERT_TRUE(sim.rounds_to_guard.has_value());
  EXPECT_LE(*sim.rounds_to_guard, 1);
  std::vector<Vertex> not_geodesic{0, 1, 2, 3};
  EXPECT_THROW(shadow_guard_simulate(cycle_graph(5), not_geodesic, 1), InvalidInput);
}

TEST(PathRetraction, IsAnEdgePreservingRetraction) {
  for (int i = 0; i < 20; ++i) {
    Graph g = random_connected(5 + i % 8, 2000 + i, 1, 3);
    auto dm = distance_matrix(g);
    Vertex a = 0, b = 0;
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = 0; v < g.order(); ++v)
        if (dm[u][v] > dm[a][b]) a = u, b = v;
    auto p = geodesic_between(g, a, b);
    PathRetraction phi = path_retraction(g, p);
    for (Vertex v : p) EXPECT_EQ(phi.shadow(v), v);
    for (auto [u, v] : g.edges()) EXPECT_TRUE(phi.shadow(u) == phi.shadow(v) || g.adjacent(phi.shadow(u), phi.shadow(v)));
  }
}

TEST(Certify, StationaryCopOnC4Escapes) {
  StationaryStrategy still;
  CertificateCheck chk = certify_strategy(cycle_graph(4), {0}, still, std::nullopt);
  EXPECT_FALSE(chk.valid);
  EXPECT_FALSE(chk.worst_rounds.has_value());
}

TEST(Certify, TableStrategyAchievesExactValue) {
  for (int i = 0; i < 15; ++i) {
    Graph g = random_connected(3 + i % 6, 2100 + i, 1, 2);
    auto table = std::make_shared<SolvedGame>(solve_game(g, 2));
    CaptResult best = best_placement(*table);
    if (!best.value.is_finite()) continue;
    TableStrategy strat(table);
    CertificateCheck chk = certify_strategy(g, best.witness.vector(), strat, best.value.rounds());
    EXPECT_TRUE(chk.valid);
    ASSERT_TRUE(chk.worst_rounds.has_value());
    EXPECT_EQ(*chk.worst_rounds, best.value.rounds());
  }
}

TEST(Staged, PathCertificate) {
  Graph g = path_graph(16);
  PlacementCertificate cert = staged_decomposition(g, StagedParams{8, 2, 4, 4, 1, std::nullopt});
  CertificateCheck chk = certify_strategy(g, cert);
  EXPECT_TRUE(chk.valid);
  EXPECT_LE(solve_placement(g, cert.placement()).value, GameValue::finite(cert.claimed_bound));
  EXPECT_FALSE(cert.transcript.empty());
}

TEST(Staged, SoundOnRandomGraphs) {
  for (int i = 0; i < 25; ++i) {
    Graph g = random_connected(4 + i % 7, 2200 + i, 1, 3);
    PlacementCertificate cert = staged_decomposition(g, StagedParams::from_lambert(lambert_params(g.order())));
    if (cert.cops.size() > 5) continue;
    CertificateCheck chk = certify_strategy(g, cert);
    EXPECT_TRUE(chk.valid || !cert.complete) << graph_to_json(g).dump();
    if (cert.complete) EXPECT_LE(solve_placement(g, cert.placement()).value, GameValue::finite(cert.claimed_bound));
  }
}

TEST(Staged, SingleStarClaimsOneRound) {
  PlacementCertificate cert = staged_decomposition(path_graph(3), StagedParams{4, 2, 2, 3, 2, std::nullopt});
  EXPECT_GE(cert.claimed_bound, 1);
  EXPECT_TRUE(certify_strategy(path_graph(3), cert).valid);
}

TEST(Feedback, UnicyclicWithinTwoSqrtNPlusOne) {
  // C_9 with a pendant path of three vertices
  std::vector<Edge> e;
  for (int v = 0; v < 9; ++v) e.emplace_back(v, (v + 1) % 9);
  e.emplace_back(0, 9);
  e.emplace_back(9, 10);
  e.emplace_back(10, 11);
  Graph g = Graph::from_edges(12, e);
  FeedbackCertificate fb = feedback_bound(g);
  EXPECT_EQ(fb.feedback.size, 1);
  EXPECT_TRUE(certify_strategy(g, fb.certificate).valid);
  EXPECT_LE(fb.certificate.cost(), 7);
}

TEST(Feedback, TreesNeedNoPosts) {
  Graph t = random_tree(30, 5);
  FeedbackCertificate fb = feedback_bound(t);
  EXPECT_EQ(fb.feedback.size, 0);
  EXPECT_TRUE(certify_strategy(t, fb.certificate).valid);
  EXPECT_LE(fb.certificate.cost(), 2 * static_cast<int>(std::ceil(std::sqrt(30.0))) + 1);
}

TEST(Certificate, JsonExport) {
  PlacementCertificate cert = staged_decomposition(path_graph(10), StagedParams{4, 1, 3, 2, 1, std::nullopt});
  certify_strategy(path_graph(10), cert);
  nlohmann::json j = certificate_to_json(cert);
  EXPECT_EQ(j["claimed_bound"], cert.claimed_bound);
  EXPECT_TRUE(j.contains("strategy"));
}
