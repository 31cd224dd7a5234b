#include <gtest/gtest.h>

#include <sstream>

#include "copthrottle/copthrottle.hpp"

using namespace copthrottle;

TEST(Play, RobberOnPathIsCaughtInTime) {
  SolvedGame t = solve_game(path_graph(5), 1);
  std::istringstream in("move 0\nmove 0\nmove 0\nmove 0\n");
  std::ostringstream out;
  PlayOutcome o = play_session(t, HumanSide::robber, in, out);
  EXPECT_NE(out.str().find("engine places cops at 2"), std::string::npos) << out.str();
  EXPECT_TRUE(o.captured);
  EXPECT_LE(o.rounds, 2);
}

TEST(Play, CopOnFourCycleReportsInfiniteValue) {
  SolvedGame t = solve_game(cycle_graph(4), 1);
  std::istringstream in("move 0\nvalue\nquit\n");
  std::ostringstream out;
  PlayOutcome o = play_session(t, HumanSide::cops, in, out);
  EXPECT_TRUE(o.quit);
  EXPECT_FALSE(o.captured);
  EXPECT_NE(out.str().find("inf"), std::string::npos) << out.str();
}

TEST(Play, IllegalMoveIsRejected) {
  SolvedGame t = solve_game(path_graph(5), 1);
  std::istringstream in("move 7\nhint\nquit\n");
  std::ostringstream out;
  PlayOutcome o = play_session(t, HumanSide::robber, in, out);
  EXPECT_NE(out.str().find("illegal move; legal: any vertex 0..4"), std::string::npos) << out.str();
  EXPECT_NE(out.str().find("optimal: "), std::string::npos);
  EXPECT_TRUE(o.quit);
}
