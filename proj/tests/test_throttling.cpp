#include <gtest/gtest.h>

#include <fstream>

#include "copthrottle/copthrottle.hpp"
#include "oracles.hpp"

using namespace copthrottle;

namespace {

// th_c and th_c^x straight from the minimax oracle, k = 1..n
std::pair<int, int> oracle_throttling(const Graph& g) {
  int best_sum = 1 << 30, best_prod = 1 << 30;
  for (int k = 1; k <= g.order(); ++k) {
    oracle::Minimax mm(g, k, 2 * g.order());
    auto c = mm.capt();
    if (!c) continue;
    best_sum = std::min(best_sum, k + *c);
    best_prod = std::min(best_prod, k * (1 + *c));
  }
  return {best_sum, best_prod};
}

}  // namespace

TEST(Throttling, PathOfNine) {
  ThrottlingReport rep = throttling_report(path_graph(9));
  EXPECT_TRUE(rep.complete);
  EXPECT_EQ(rep.cop_number, 1);
  EXPECT_EQ(rep.th_sum, 4);
  EXPECT_EQ(rep.th_sum_ks, (std::vector<int>{2, 3}));
  EXPECT_EQ(rep.th_prod, 5);
  EXPECT_EQ(rep.th_prod_ks, (std::vector<int>{1}));
}

TEST(Throttling, AgreesWithOracleOnSmallGraphs) {
  for (int i = 0; i < 25; ++i) {
    Graph g = random_connected(2 + i % 4, 500 + i, 1, 2 + i % 3);
    auto [s, p] = oracle_throttling(g);
    ThrottlingReport rep = throttling_report(g);
    EXPECT_EQ(rep.th_sum, s) << graph_to_json(g).dump();
    EXPECT_EQ(rep.th_prod, p) << graph_to_json(g).dump();
  }
}

TEST(Throttling, CompleteAndEmptyGraphs) {
  EXPECT_EQ(throttling_report(complete_graph(6)).th_prod, 2);
  ThrottlingReport e3 = throttling_report(empty_graph(3));
  EXPECT_EQ(e3.cop_number, 3);
  EXPECT_EQ(e3.th_sum, 3);
  EXPECT_EQ(e3.th_prod, 3);
  EXPECT_EQ(throttling_report(empty_graph(1)).th_prod, 1);
}

TEST(Throttling, KMaxMarksReportIncomplete) {
  ThrottlingReport rep = throttling_report(cycle_graph(6), 1);
  EXPECT_FALSE(rep.complete);
  EXPECT_EQ(rep.cop_number, 0);
}

TEST(Throttling, BudgetExceededNamesOpenRange) {
  try {
    throttling_report(petersen_graph(), std::nullopt, Budget{2000});
    FAIL();
  } catch (const BudgetExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("sweep open for k"), std::string::npos);
  }
}

TEST(Throttling, PointsAreAchievable) {
  Graph g = spider(3, 2);
  ThrottlingReport rep = throttling_report(g);
  for (const auto& pt : rep.points) {
    SolvedGame t = solve_game(g, pt.k);
    bool found = false;
    for (const CopConfig& c : t.configs()) found = found || t.placement_value(c) == GameValue::finite(pt.p);
    EXPECT_TRUE(found) << pt.k << "," << pt.p;
    EXPECT_EQ(pt.sum_minimum, pt.k + pt.p == rep.th_sum);
    EXPECT_EQ(pt.product_minimum, pt.k * (1 + pt.p) == rep.th_prod);
  }
}

TEST(Iq, SetDefinition) {
  EXPECT_EQ(iq_set(5), (std::vector<std::pair<int, int>>{{3, 2}}));
  EXPECT_EQ(iq_set(4), (std::vector<std::pair<int, int>>{{2, 2}, {3, 1}}));
}

TEST(Iq, PathOfNine) {
  IqCheck c = check_iq_proposition(path_graph(9));
  EXPECT_TRUE(c.holds);
  EXPECT_FALSE(c.left);
  EXPECT_FALSE(c.right);
}

TEST(Iq, PropositionIsAnEquivalence) {
  for (int i = 0; i < 40; ++i) {
    Graph g = random_connected(2 + i % 7, 900 + i, 1, 2 + i % 4);
    IqCheck c = check_iq_proposition(g);
    EXPECT_EQ(c.left, c.right) << graph_to_json(g).dump();
    EXPECT_TRUE(c.holds);
  }
}

TEST(Sandwich, ProductBetweenSumAndQuarterSquare) {
  for (int i = 0; i < 40; ++i) {
    Graph g = random_connected(2 + i % 8, 1300 + i, 1, 2 + i % 4);
    ThrottlingReport rep = throttling_report(g);
    EXPECT_LE(rep.th_sum, rep.th_prod);
    EXPECT_LE(rep.th_prod, (rep.th_sum + 1) * (rep.th_sum + 1) / 4);
    EXPECT_LE(rep.th_prod, 2 * domination_number(g));
  }
}

TEST(LowClassifier, NamedCases) {
  EXPECT_EQ(*classify_thprod_low(empty_graph(1)).value, 1);
  EXPECT_EQ(*classify_thprod_low(complete_graph(5)).value, 2);
  EXPECT_EQ(*classify_thprod_low(star_graph(4)).value, 2);
  LowClassification p5 = classify_thprod_low(path_graph(5));
  EXPECT_EQ(*p5.value, 3);
  EXPECT_EQ(to_string(p5.label), "(3)(b)");
  LowClassification c4 = classify_thprod_low(cycle_graph(4));
  EXPECT_EQ(*c4.value, 4);
  EXPECT_FALSE(classify_thprod_low(cycle_graph(9)).value.has_value());
}

TEST(LowClassifier, AgreesWithExactOnAtlasUpTo6) {
  std::ifstream in(COPTHROTTLE_TEST_DATA "/connected_le7.g6");
  for (const Graph& g : read_graph6_file(in)) {
    if (g.order() > 6) continue;
    LowClassification c = classify_thprod_low(g);
    int exact = throttling_report(g).th_prod;
    if (c.value) EXPECT_EQ(*c.value, exact) << to_string(c.label) << " " << graph_to_json(g).dump();
    else EXPECT_GE(exact, 5) << graph_to_json(g).dump();
  }
}

TEST(Export, CsvAndJsonCarryTheTable) {
  ThrottlingReport rep = throttling_report(path_graph(4));
  std::string csv = report_to_csv(rep);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "k,capt_k,th_sum_k,th_prod_k,witness");
  nlohmann::json j = report_to_json(rep);
  EXPECT_EQ(j["th_c"], rep.th_sum);
  EXPECT_EQ(j["rows"].size(), rep.rows.size());
  EXPECT_EQ(report_to_json(rep).dump(), j.dump());
}
