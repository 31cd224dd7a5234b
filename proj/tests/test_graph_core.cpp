#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "copthrottle/copthrottle.hpp"
#include "oracles.hpp"

using namespace copthrottle;

namespace {

std::vector<Graph> small_random(int count, int max_n, std::uint64_t seed) {
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    Rng rng(seed + static_cast<std::uint64_t>(i));
    int n = 1 + static_cast<int>(rng.below(max_n));
    std::vector<Edge> e;
    int den = 2 + static_cast<int>(rng.below(4));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.below(den) == 0) e.emplace_back(u, v);
    out.push_back(Graph::from_edges(n, e));
  }
  return out;
}

std::vector<Graph> atlas() {
  std::ifstream in(COPTHROTTLE_TEST_DATA "/connected_le7.g6");
  return read_graph6_file(in);
}

}  // namespace

TEST(Graph, RejectsLoopsAndOutOfRange) {
  std::vector<Edge> loop{{0, 0}};
  EXPECT_THROW(Graph::from_edges(2, loop), InvalidInput);
  std::vector<Edge> far{{0, 5}};
  EXPECT_THROW(Graph::from_edges(3, far), InvalidInput);
  EXPECT_THROW(Graph(-1), InvalidInput);
}

TEST(Graph, DuplicateEdgesMerge) {
  std::vector<Edge> e{{0, 1}, {1, 0}, {0, 1}};
  Graph g = Graph::from_edges(2, e);
  EXPECT_EQ(g.size(), 1u);
  EXPECT_TRUE(g.adjacent(0, 1));
}

TEST(Graph, ComponentsAndUnion) {
  Graph g = disjoint_union(path_graph(3), complete_graph(2));
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(connected_components(g).size(), 2u);
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_connected(empty_graph(1)));
}

TEST(GraphIo, JsonRoundTrip) {
  Graph g = petersen_graph();
  Graph back = graph_from_json(graph_to_json(g));
  EXPECT_EQ(back, g);
}

TEST(GraphIo, MalformedJsonIsInvalidInput) {
  EXPECT_ANY_THROW(parse_graph_json("{\"n\": 3, \"edges\": [[0, 7]]}"));
  EXPECT_ANY_THROW(parse_graph_json("{not json"));
}

TEST(GraphIo, Graph6KnownEncodings) {
  // K_1 is "@", K_2 is "A_", P_3 with edges 01,12 is "Bg" in the standard upper-triangle order
  EXPECT_EQ(to_graph6(empty_graph(1)), "@");
  EXPECT_EQ(to_graph6(complete_graph(2)), "A_");
  Graph p3 = parse_graph6("Bg");
  EXPECT_EQ(p3.order(), 3);
  EXPECT_EQ(p3.size(), 2u);
}

TEST(GraphIo, Graph6RoundTripRandom) {
  for (const Graph& g : small_random(200, 12, 7)) EXPECT_EQ(parse_graph6(to_graph6(g)), g);
}

TEST(GraphIo, EdgeListAndAutoDetect) {
  std::istringstream edges("4 3\n0 1\n1 2\n2 3\n");
  Graph g = read_graph(edges);
  EXPECT_EQ(g, path_graph(4));
  std::istringstream g6(to_graph6(cycle_graph(5)));
  EXPECT_EQ(read_graph(g6), cycle_graph(5));
}

TEST(GraphIo, AtlasCorpusHasAllConnectedGraphsUpTo7) {
  auto gs = atlas();
  EXPECT_EQ(gs.size(), 996u);  // OEIS A001349 summed over n = 1..7: 1+1+2+6+21+112+853
  for (const Graph& g : gs) EXPECT_TRUE(is_connected(g));
}

TEST(Distance, DominationMatchesBruteForce) {
  for (const Graph& g : small_random(120, 8, 11)) {
    if (!is_connected(g)) continue;
    for (int r = 1; r <= 2; ++r) {
      auto exact = k_distance_dominating(g, r, DominationMode::exact);
      EXPECT_EQ(static_cast<int>(exact.size()), oracle::distance_domination(g, r));
      int m = oracle::max_distance(g, std::vector<int>(exact.begin(), exact.end()));
      EXPECT_GE(m, 0);
      EXPECT_LE(m, r);
    }
  }
}

TEST(Distance, KRadiusMatchesBruteForce) {
  for (const Graph& g : small_random(120, 8, 13)) {
    for (int k = 1; k <= std::min(3, g.order()); ++k) {
      RadiusResult r = k_radius_exact(g, k);
      int want = oracle::k_radius(g, k);
      if (want < 0) EXPECT_FALSE(r.value.has_value());
      else {
        ASSERT_TRUE(r.value.has_value());
        EXPECT_EQ(*r.value, want);
      }
    }
  }
}

TEST(Distance, KnownValues) {
  EXPECT_EQ(graph_center(path_graph(9)).radius, 4);
  EXPECT_EQ(diameter(cycle_graph(7)), 3);
  EXPECT_EQ(domination_number(petersen_graph()), 3);
  EXPECT_EQ(domination_number(m_ell(7)), 25);
  auto geo = geodesic_between(grid_graph(3, 3), 0, 8);
  EXPECT_EQ(geo.size(), 5u);
}

TEST(Distance, GreedyWithinMeirMoon) {
  for (const Graph& g : small_random(200, 12, 17)) {
    if (!is_connected(g)) continue;
    const int n = g.order();
    for (int k = 1; k < n; ++k) {
      auto d = k_distance_dominating(g, k, DominationMode::greedy);
      EXPECT_LE(static_cast<int>(d.size()), std::max(1, n / (k + 1)));
      auto far = distances_from_set(g, d).max();
      ASSERT_TRUE(far.has_value());
      EXPECT_LE(*far, k);
    }
  }
}

TEST(Distance, DisconnectedReportsUnreachable) {
  Graph g = disjoint_union(path_graph(2), path_graph(2));
  EXPECT_FALSE(eccentricity(g, 0).has_value());
  EXPECT_FALSE(k_radius_exact(g, 1).value.has_value());
  EXPECT_EQ(*k_radius_exact(g, 2).value, 1);
}

TEST(Structure, FeedbackMatchesBruteForce) {
  for (const Graph& g : small_random(150, 8, 19)) {
    FeedbackSet f = feedback_vertex_number(g);
    EXPECT_EQ(f.size, oracle::feedback_number(g));
    EXPECT_TRUE(oracle::acyclic_after_removing(g, std::vector<int>(f.witness.begin(), f.witness.end())));
  }
  EXPECT_EQ(feedback_vertex_number(random_tree(20, 3)).size, 0);
  EXPECT_EQ(feedback_vertex_number(petersen_graph()).size, 3);
}

TEST(Structure, CornersDefinition) {
  for (const Graph& g : small_random(100, 8, 23)) {
    auto cs = corners(g);
    for (const auto& c : cs) {
      EXPECT_NE(c.corner, c.dominator);
      for (Vertex w : g.neighbors(c.corner)) EXPECT_TRUE(w == c.dominator || g.adjacent(c.dominator, w));
      EXPECT_TRUE(g.adjacent(c.corner, c.dominator));
    }
  }
  // a leaf is cornered by its neighbor; a cycle vertex of C_5 is not a corner
  EXPECT_FALSE(corners(path_graph(3)).empty());
  EXPECT_TRUE(corners(cycle_graph(5)).empty());
}

TEST(Structure, MinorsMatchBruteForceOnAtlas) {
  const Graph k4 = complete_graph(4), k23 = complete_bipartite(2, 3);
  int checked = 0;
  for (const Graph& g : atlas()) {
    if (g.order() > 6) continue;
    EXPECT_EQ(has_k4_minor(g), oracle::has_minor(g, k4)) << graph_to_json(g).dump();
    EXPECT_EQ(has_k23_minor(g), oracle::has_minor(g, k23)) << graph_to_json(g).dump();
    ++checked;
  }
  EXPECT_EQ(checked, 143);  // connected graphs on 1..6 vertices
}

TEST(Structure, OuterplanarMatchesBookEmbeddingOnAtlas) {
  int outerplanar = 0;
  for (const Graph& g : atlas()) {
    bool mine = is_outerplanar(g);
    EXPECT_EQ(mine, oracle::outerplanar_by_book_embedding(g)) << graph_to_json(g).dump();
    outerplanar += mine;
  }
  // networkx reference: planarity of G plus an apex vertex, over the same corpus
  EXPECT_EQ(outerplanar, 240);
}

TEST(Structure, BoundaryVertices) {
  // on a path from an end, only the far end is a boundary vertex
  auto b = boundary_vertices(path_graph(5), 0);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], 4);
}

TEST(Structure, BoundarySetOfChordalGraphNeedNotBeCorners) {
  // 3-sun: triangle 0,1,3 with ears 2 (on 01), 4 (on 03), 5 (on 13)
  std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 5}, {3, 4}, {3, 5}};
  Graph sun = Graph::from_edges(6, e);
  ASSERT_TRUE(oracle::chordal_by_cycles(sun));
  auto b = boundary_vertices(sun, 4);
  EXPECT_EQ(b, (std::vector<Vertex>{1, 2, 5}));
  EXPECT_FALSE(is_disjoint_corner_set(sun, b));
}
