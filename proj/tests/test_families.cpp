#include <gtest/gtest.h>

#include "copthrottle/copthrottle.hpp"
#include "oracles.hpp"

using namespace copthrottle;

TEST(Families, Orders) {
  EXPECT_EQ(path_graph(7).order(), 7);
  EXPECT_EQ(cycle_graph(5).size(), 5u);
  EXPECT_EQ(complete_graph(6).size(), 15u);
  EXPECT_EQ(star_graph(4).order(), 5);
  EXPECT_EQ(complete_bipartite(2, 3).size(), 6u);
  EXPECT_EQ(spider(3, 2).order(), 7);
  EXPECT_EQ(grid_graph(3, 4).size(), 17u);
  EXPECT_EQ(petersen_graph().size(), 15u);
  EXPECT_EQ(heawood_graph().size(), 21u);
  EXPECT_EQ(diameter(heawood_graph()), 3);
}

TEST(Families, MEllShape) {
  for (int l = 1; l <= 8; ++l) {
    Graph g = m_ell(l);
    EXPECT_EQ(g.order(), 6 * l + 8);
    EXPECT_EQ(g.size(), static_cast<std::size_t>(g.order()));  // connected with exactly one cycle
    EXPECT_TRUE(is_connected(g));
    int leaves = 0;
    for (Vertex v = 0; v < g.order(); ++v) leaves += g.degree(v) == 1;
    EXPECT_EQ(leaves, 3 * l + 4);
    EXPECT_EQ(feedback_vertex_number(g).size, 1);
  }
}

TEST(Families, MEllSevenValues) {
  MEllCheck c = m_ell_check(7, {});
  EXPECT_EQ(c.order, 50);
  EXPECT_EQ(c.gamma, 25);
  EXPECT_FALSE(c.capt1.is_finite());
  EXPECT_EQ(c.capt2, GameValue::finite(9));
  EXPECT_EQ(c.proof_capt, GameValue::finite(5));
  EXPECT_LT(3 * (1 + c.proof_capt.rounds()), 2 * (1 + c.capt2.rounds()));
  EXPECT_LT(3 * (1 + c.proof_capt.rounds()), 2 * c.gamma);
}

TEST(Families, HFamily) {
  Graph h = h_family(3, 2, cycle_graph(4));
  EXPECT_EQ(h.order(), 1 + 3 * 2 + 3 * 4);
  EXPECT_EQ(h.size(), 6u + 12u + 3u);
  EXPECT_TRUE(is_connected(h));
  EXPECT_THROW(h_family(2, 2, cycle_graph(4)), InvalidInput);
}

TEST(Families, RandomChordalIsChordalAndConnected) {
  for (int i = 0; i < 60; ++i) {
    Graph g = random_chordal(1 + i % 14, 3000 + i);
    EXPECT_TRUE(is_connected(g));
    EXPECT_TRUE(oracle::chordal_by_cycles(g)) << graph_to_json(g).dump();
  }
  EXPECT_EQ(random_chordal(9, 4), random_chordal(9, 4));
}

TEST(Families, RandomTreeAndConnected) {
  for (int i = 0; i < 30; ++i) {
    Graph t = random_tree(1 + i, 50 + i);
    EXPECT_TRUE(is_connected(t));
    EXPECT_EQ(t.size(), static_cast<std::size_t>(t.order() - 1));
    EXPECT_TRUE(is_connected(random_connected(1 + i % 12, 80 + i, 1, 4)));
  }
}

TEST(Families, AttachStarKeepsBaseInduced) {
  Graph base = cycle_graph(5);
  Graph g = attach_star(base, 3, {{2, 5}, {4, 6}});
  EXPECT_EQ(g.order(), 9);
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(g.adjacent(u, v), base.adjacent(u, v));
  EXPECT_THROW(attach_star(base, 3, {{0, 2}}), InvalidInput);
}

TEST(FamilySpec, LongAndShortForms) {
  EXPECT_EQ(generate_named("spider:legs=3,len=2"), spider(3, 2));
  EXPECT_EQ(generate_named("spider(3,2)"), spider(3, 2));
  EXPECT_EQ(generate_named("path(5)"), path_graph(5));
  EXPECT_EQ(generate_named("p5"), path_graph(5));
  EXPECT_EQ(generate_named("c4"), cycle_graph(4));
  EXPECT_EQ(generate_named("k5"), complete_graph(5));
  EXPECT_EQ(generate_named("m_ell(2)"), m_ell(2));
  EXPECT_EQ(generate_named("h_family:legs=3,len=1,core=cycle:n=4"), h_family(3, 1, cycle_graph(4)));
  EXPECT_EQ(generate_named("attach_leaves:core=p3").order(), 6);
}

TEST(FamilySpec, Errors) {
  EXPECT_THROW(generate_named("nosuch"), InvalidInput);
  EXPECT_THROW(generate_named("path:n=x"), InvalidInput);
  EXPECT_THROW(generate_named("path"), InvalidInput);
  EXPECT_THROW(generate_named("path(1,2)"), InvalidInput);
  EXPECT_THROW(generate_named("h_family:legs=3,len=1"), InvalidInput);
}
