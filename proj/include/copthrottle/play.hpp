#pragma once

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "copthrottle/game.hpp"
#include "copthrottle/graph.hpp"

namespace copthrottle {

enum class HumanSide { robber, cops };

struct PlayOutcome {
  bool captured = false;
  int rounds = 0;  // cop moves made
  bool quit = false;
};

namespace detail {

inline std::string closed_neighborhood_text(const Graph& g, Vertex v) {
  std::vector<Vertex> opts{v};
  for (Vertex w : g.neighbors(v)) opts.push_back(w);
  std::sort(opts.begin(), opts.end());
  std::string s;
  for (std::size_t i = 0; i < opts.size(); ++i) s += (i ? " " : "") + std::to_string(opts[i]);
  return s;
}

inline bool parse_vertices(std::istringstream& in, std::vector<Vertex>& out) {
  out.clear();
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      long v = std::stol(tok, &used);
      if (used != tok.size()) return false;
      out.push_back(static_cast<Vertex>(v));
    } catch (const std::exception&) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

/// Line-oriented game against the optimal engine of a solved table. Commands:
/// `move v` (robber) or `move v1 v2 ...` (cops, in the listed order), `hint`,
/// `value`, `quit`. The engine plays the lexicographically least optimal move.
inline PlayOutcome play_session(const SolvedGame& table, HumanSide side, std::istream& in, std::ostream& out) {
  const Graph& g = table.graph();
  const int k = table.cops();
  PlayOutcome result;
  CopConfig cops;
  Vertex robber = -1;
  bool placed_cops = false, placed_robber = false;
  bool cops_to_move = true;

  auto value_now = [&]() -> GameValue {
    if (!placed_cops) return best_placement(table).value;
    if (!placed_robber) return table.placement_value(cops);
    return cops_to_move ? table.value(cops, robber) : robber_to_move_value(table, cops, robber);
  };
  auto show = [&] {
    out << "round " << result.rounds << ": cops at " << cops.to_string();
    if (placed_robber) out << ", robber at " << robber;
    out << ", value " << value_now().to_string() << "\n";
  };
  auto legal_text = [&]() -> std::string {
    if (side == HumanSide::robber) {
      if (!placed_robber) return "any vertex 0.." + std::to_string(g.order() - 1);
      return detail::closed_neighborhood_text(g, robber);
    }
    if (!placed_cops) return std::to_string(k) + " vertices in 0.." + std::to_string(g.order() - 1);
    std::string s;
    for (std::size_t i = 0; i < cops.positions().size(); ++i)
      s += (i ? "; " : "") + std::string("cop ") + std::to_string(i) + ": " +
           detail::closed_neighborhood_text(g, cops.positions()[i]);
    return s;
  };
  auto caught = [&] { return placed_robber && cops.contains(robber); };

  auto engine_turn = [&] {
    if (side == HumanSide::robber) {
      if (!placed_cops) {
        cops = best_placement(table).witness;
        placed_cops = true;
        out << "engine places cops at " << cops.to_string() << "\n";
        return;
      }
      auto moves = optimal_moves(table, {cops, robber}, Mover::cops);
      cops = moves.front().cops;
      ++result.rounds;
      cops_to_move = false;
      out << "engine moves cops to " << cops.to_string() << "\n";
      return;
    }
    if (!placed_robber) {
      Vertex best = 0;
      GameValue worst = GameValue::finite(0);
      for (Vertex r = 0; r < g.order(); ++r) {
        GameValue v = cops.contains(r) ? GameValue::finite(0) : table.value(cops, r);
        if (r == 0 || worst < v) worst = v, best = r;
      }
      robber = best;
      placed_robber = true;
      out << "engine places robber at " << robber << "\n";
      return;
    }
    auto moves = optimal_moves(table, {cops, robber}, Mover::robber);
    robber = moves.front().robber;
    cops_to_move = true;
    out << "engine moves robber to " << robber << "\n";
  };
  auto human_to_move = [&] {
    if (side == HumanSide::robber) return placed_cops && (!placed_robber || !cops_to_move);
    return !placed_cops || (placed_robber && cops_to_move);
  };
  auto hint = [&]() -> std::string {
    if (side == HumanSide::robber) {
      if (!placed_robber) {
        Vertex best = 0;
        GameValue worst = GameValue::finite(0);
        for (Vertex r = 0; r < g.order(); ++r) {
          GameValue v = cops.contains(r) ? GameValue::finite(0) : table.value(cops, r);
          if (r == 0 || worst < v) worst = v, best = r;
        }
        return std::to_string(best);
      }
      std::string s;
      for (const auto& m : optimal_moves(table, {cops, robber}, Mover::robber)) s += (s.empty() ? "" : ", ") + std::to_string(m.robber);
      return s;
    }
    if (!placed_cops) return best_placement(table).witness.to_string();
    std::string s;
    for (const auto& m : optimal_moves(table, {cops, robber}, Mover::cops)) s += (s.empty() ? "" : ", ") + m.cops.to_string();
    return s;
  };

  while (!human_to_move() && !caught()) engine_turn();
  show();
  std::string line;
  while (!caught()) {
    out << "> " << std::flush;
    if (!std::getline(in, line)) {
      result.quit = true;
      break;
    }
    std::istringstream words(line);
    std::string cmd;
    words >> cmd;
    if (cmd.empty()) continue;
    if (cmd == "quit") {
      result.quit = true;
      break;
    }
    if (cmd == "value") {
      out << value_now().to_string() << "\n";
      continue;
    }
    if (cmd == "hint") {
      out << "optimal: " << hint() << "\n";
      continue;
    }
    if (cmd != "move") {
      out << "commands: move <v...>, hint, value, quit\n";
      continue;
    }
    std::vector<Vertex> vs;
    bool ok = detail::parse_vertices(words, vs);
    if (side == HumanSide::robber) {
      ok = ok && vs.size() == 1 && vs[0] >= 0 && vs[0] < g.order() &&
           (!placed_robber || vs[0] == robber || g.adjacent(robber, vs[0]));
      if (!ok) {
        out << "illegal move; legal: " << legal_text() << "\n";
        continue;
      }
      robber = vs[0];
      placed_robber = true;
      cops_to_move = true;
    } else {
      ok = ok && static_cast<int>(vs.size()) == k;
      for (std::size_t i = 0; ok && i < vs.size(); ++i) {
        ok = vs[i] >= 0 && vs[i] < g.order();
        if (ok && placed_cops) ok = vs[i] == cops.positions()[i] || g.adjacent(cops.positions()[i], vs[i]);
      }
      if (!ok) {
        out << "illegal move; legal: " << legal_text() << "\n";
        continue;
      }
      if (placed_cops) {
        ++result.rounds;
        cops_to_move = false;
      }
      cops = CopConfig(vs);
      placed_cops = true;
    }
    while (!caught() && !human_to_move()) engine_turn();
    show();
  }
  result.captured = caught();
  if (result.captured) out << "captured after " << result.rounds << " rounds\n";
  else out << "quit after " << result.rounds << " rounds\n";
  return result;
}

}  // namespace copthrottle
