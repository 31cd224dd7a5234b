#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "copthrottle/distance.hpp"
#include "copthrottle/errors.hpp"
#include "copthrottle/game.hpp"
#include "copthrottle/graph.hpp"
#include "copthrottle/structure.hpp"

namespace copthrottle {

struct ThrottlingRow {
  int k = 0;
  GameValue capt;
  GameValue sum;   // k + capt
  GameValue prod;  // k (1 + capt)
  CopConfig witness;
  std::vector<int> achievable;  // every finite capt(G;S) over |S| = k, ascending
};

struct ThrottlingPoint {
  int k = 0;
  int p = 0;
  bool sum_minimum = false;
  bool product_minimum = false;

  friend bool operator==(const ThrottlingPoint&, const ThrottlingPoint&) = default;
};

struct ThrottlingReport {
  std::string name;
  int n = 0;
  std::vector<ThrottlingRow> rows;
  int cop_number = 0;
  int th_sum = 0;
  int th_prod = 0;
  std::vector<int> th_sum_ks;   // every k attaining th_c
  std::vector<int> th_prod_ks;  // every k attaining th_c^x
  std::vector<ThrottlingPoint> points;
  bool complete = false;  // false only when an explicit k_max cut the sweep short

  const ThrottlingRow& row(int k) const {
    for (const auto& r : rows)
      if (r.k == k) return r;
    throw InvalidInput("throttling report has no row for k=" + std::to_string(k));
  }
};

/// Exact th_c and th_c^x by sweeping k = 1, 2, ... Since th_c(G,k) >= k and
/// th_c^x(G,k) >= k, no k beyond both incumbents can improve either, so the
/// sweep stops there (or at n). An explicit k_max caps the sweep; the report
/// is then marked incomplete unless the pruning bound was reached anyway.
inline ThrottlingReport throttling_report(const Graph& g, std::optional<int> k_max = std::nullopt,
                                          const Budget& budget = {}) {
  const int n = g.order();
  if (n < 1) throw InvalidInput("throttling_report: empty graph");
  if (k_max && *k_max < 1) throw InvalidInput("throttling_report: k_max must be positive");
  ThrottlingReport rep;
  rep.name = g.name();
  rep.n = n;
  std::optional<int> best_sum, best_prod;
  int k = 1;
  for (; k <= n; ++k) {
    if (best_sum && best_prod && k > std::max(*best_sum, *best_prod)) break;
    if (k_max && k > *k_max) break;
    SolvedGame table = [&] {
      try {
        return solve_game(g, k, budget);
      } catch (const BudgetExceeded& e) {
        std::string upper = best_sum && best_prod ? std::to_string(std::min(n, std::max(*best_sum, *best_prod)))
                                                  : std::to_string(n);
        throw BudgetExceeded("throttling_report: sweep open for k in [" + std::to_string(k) + ", " + upper + "]",
                             e.required(), e.limit());
      }
    }();
    ThrottlingRow row;
    row.k = k;
    CaptResult best = best_placement(table);
    row.capt = best.value;
    row.witness = best.witness;
    row.sum = best.value.plus(k);
    row.prod = best.value.product_cost(k);
    std::set<int> values;
    for (std::uint64_t c = 0; c < table.config_count(); ++c) {
      GameValue v = table.placement_value_at(c);
      if (v.is_finite()) values.insert(v.rounds());
    }
    row.achievable.assign(values.begin(), values.end());
    if (row.capt.is_finite()) {
      if (!rep.cop_number) rep.cop_number = k;
      best_sum = std::min(best_sum.value_or(row.sum.rounds()), row.sum.rounds());
      best_prod = std::min(best_prod.value_or(row.prod.rounds()), row.prod.rounds());
    }
    rep.rows.push_back(std::move(row));
  }
  // capt_n is always finite (a cop on every vertex), so both incumbents exist
  // whenever the sweep ran to its natural end
  rep.complete = best_sum && best_prod && (k > n || k > std::max(*best_sum, *best_prod));
  if (!best_sum) return rep;
  rep.th_sum = *best_sum;
  rep.th_prod = *best_prod;
  for (const auto& r : rep.rows) {
    if (!r.capt.is_finite()) continue;
    if (r.sum.rounds() == rep.th_sum) rep.th_sum_ks.push_back(r.k);
    if (r.prod.rounds() == rep.th_prod) rep.th_prod_ks.push_back(r.k);
    for (int p : r.achievable)
      rep.points.push_back({r.k, p, r.k + p == rep.th_sum, r.k * (1 + p) == rep.th_prod});
  }
  return rep;
}

/// All achievable (k, p) pairs up to the sweep bound, with minimality flags.
inline std::vector<ThrottlingPoint> throttling_points(const Graph& g, const Budget& budget = {}) {
  return throttling_report(g, std::nullopt, budget).points;
}

/// I(q): the pairs (x, q-x) maximizing x(1 + q - x).
inline std::vector<std::pair<int, int>> iq_set(int q) {
  if (q % 2) return {{(q + 1) / 2, (q - 1) / 2}};
  return {{q / 2, q / 2}, {(q + 2) / 2, (q - 2) / 2}};
}

struct IqCheck {
  int q = 0;
  int th_prod = 0;
  std::vector<std::pair<int, int>> iq;
  std::vector<ThrottlingPoint> sum_minimum;
  bool all_in_iq = false;
  bool product_overlap = false;
  bool left = false;   // th_c^x == floor((q+1)^2 / 4)
  bool right = false;  // all sum-minimum points in I(q) and one is product-minimum
  bool holds = false;  // left <=> right
};

inline IqCheck check_iq_proposition(const ThrottlingReport& rep) {
  if (!rep.complete) throw InvalidInput("check_iq_proposition: throttling report is incomplete");
  IqCheck out;
  out.q = rep.th_sum;
  out.th_prod = rep.th_prod;
  out.iq = iq_set(out.q);
  out.all_in_iq = true;
  for (const auto& p : rep.points) {
    if (!p.sum_minimum) continue;
    out.sum_minimum.push_back(p);
    if (std::find(out.iq.begin(), out.iq.end(), std::pair{p.k, p.p}) == out.iq.end()) out.all_in_iq = false;
    if (p.product_minimum) out.product_overlap = true;
  }
  out.left = out.th_prod == (out.q + 1) * (out.q + 1) / 4;
  out.right = out.all_in_iq && out.product_overlap;
  out.holds = out.left == out.right;
  return out;
}

inline IqCheck check_iq_proposition(const Graph& g, const Budget& budget = {}) {
  return check_iq_proposition(throttling_report(g, std::nullopt, budget));
}

enum class LowCase { k1, two_k1_or_dominating, three_small, radius_two_corners, four_order, gamma_two, capture_three, none };

inline std::string to_string(LowCase c) {
  switch (c) {
    case LowCase::k1: return "(1)";
    case LowCase::two_k1_or_dominating: return "(2)";
    case LowCase::three_small: return "(3)(a)";
    case LowCase::radius_two_corners: return "(3)(b)";
    case LowCase::four_order: return "(4)(a)";
    case LowCase::gamma_two: return "(4)(b)";
    case LowCase::capture_three: return "(4)(c)";
    case LowCase::none: return "none";
  }
  return "none";
}

struct LowClassification {
  std::optional<int> value;  // claimed th_c^x, or nullopt for "at least 5"
  LowCase label = LowCase::none;
  int domination = 0;
  std::optional<Vertex> z;  // witness for (3)(b)
  /// The radius-two test evaluated with u in N[z] and strict N[w] < N[u]
  /// instead of u in N(z) and inclusion; differs on some graphs.
  bool alternative_reading = false;
  bool readings_agree = true;
};

namespace detail {

inline bool is_empty_graph_of_order(const Graph& g, int n) { return g.order() == n && g.size() == 0; }

/// Some z reaches every vertex within 2 and every w outside N[z] is cornered
/// by a neighbor of z.
inline std::optional<Vertex> radius_two_corner_center(const Graph& g, bool strict_reading) {
  const int n = g.order();
  for (Vertex z = 0; z < n; ++z) {
    auto dist = bfs(g, z);
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) ok = dist[v] != kNoPath && dist[v] <= 2;
    for (Vertex w = 0; w < n && ok; ++w) {
      if (g.in_closed_neighborhood(z, w)) continue;
      bool cornered = false;
      for (Vertex u = 0; u < n && !cornered; ++u) {
        if (u == w) continue;
        if (strict_reading) {
          if (!g.in_closed_neighborhood(z, u) || !closed_neighborhood_within(g, w, u)) continue;
          cornered = g.degree(u) > g.degree(w);  // N[w] within N[u], so proper iff larger
        } else {
          cornered = g.adjacent(z, u) && closed_neighborhood_within(g, w, u);
        }
      }
      ok = cornered;
    }
    if (ok) return z;
  }
  return std::nullopt;
}

}  // namespace detail

/// Structural prediction of th_c^x when it is at most 4. Cases are tried in
/// order and the first match wins. The radius-two case is applied whenever
/// gamma(G) >= 2; graphs with gamma(G) = 2 and capture time 2 from one cop (P_5
/// for instance) have th_c^x = 3 and belong there rather than to (4)(b).
inline LowClassification classify_thprod_low(const Graph& g, const Budget& budget = {}) {
  const int n = g.order();
  if (n < 1) throw InvalidInput("classify_thprod_low: empty graph");
  LowClassification out;
  out.domination = domination_number(g, budget);
  auto z = detail::radius_two_corner_center(g, false);
  auto z_alt = detail::radius_two_corner_center(g, true);
  out.alternative_reading = z_alt.has_value();
  out.readings_agree = z.has_value() == z_alt.has_value();
  auto claim = [&](int v, LowCase c) {
    out.value = v;
    out.label = c;
    return out;
  };
  if (n == 1) return claim(1, LowCase::k1);
  if (detail::is_empty_graph_of_order(g, 2) || out.domination == 1) return claim(2, LowCase::two_k1_or_dominating);
  if (n == 3 && g.size() <= 1) return claim(3, LowCase::three_small);  // 3K_1 or K_1 + K_2
  if (out.domination >= 2 && z) {
    out.z = z;
    return claim(3, LowCase::radius_two_corners);
  }
  if (n == 4 && out.domination >= 2) return claim(4, LowCase::four_order);
  if (out.domination == 2 && n >= 4) return claim(4, LowCase::gamma_two);
  if (is_connected(g)) {
    CaptResult one = capt_k(g, 1, budget);
    if (one.value == GameValue::finite(3)) return claim(4, LowCase::capture_three);
  }
  return out;
}

inline std::string report_to_csv(const ThrottlingReport& rep) {
  std::ostringstream out;
  out << "k,capt_k,th_sum_k,th_prod_k,witness\n";
  for (const auto& r : rep.rows)
    out << r.k << ',' << r.capt.to_string() << ',' << r.sum.to_string() << ',' << r.prod.to_string() << ','
        << r.witness.to_string() << '\n';
  return out.str();
}

inline nlohmann::json game_value_json(GameValue v) {
  return v.is_finite() ? nlohmann::json(v.rounds()) : nlohmann::json("inf");
}

inline nlohmann::json report_to_json(const ThrottlingReport& rep) {
  nlohmann::json j;
  if (!rep.name.empty()) j["name"] = rep.name;
  j["n"] = rep.n;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rep.rows)
    j["rows"].push_back({{"k", r.k},
                         {"capt_k", game_value_json(r.capt)},
                         {"th_sum_k", game_value_json(r.sum)},
                         {"th_prod_k", game_value_json(r.prod)},
                         {"witness", r.witness.vector()},
                         {"achievable", r.achievable}});
  j["complete"] = rep.complete;
  if (rep.cop_number) j["cop_number"] = rep.cop_number;
  if (rep.th_sum) {
    j["th_c"] = rep.th_sum;
    j["th_c_k"] = rep.th_sum_ks;
    j["th_prod"] = rep.th_prod;
    j["th_prod_k"] = rep.th_prod_ks;
  }
  j["points"] = nlohmann::json::array();
  for (const auto& p : rep.points)
    j["points"].push_back({{"k", p.k}, {"p", p.p}, {"sum_minimum", p.sum_minimum}, {"product_minimum", p.product_minimum}});
  return j;
}

/// Solved table as [[cops], robber, value] triples in rank order.
inline nlohmann::json table_to_json(const SolvedGame& table) {
  nlohmann::json out = nlohmann::json::array();
  std::uint64_t rank = 0;
  for (const CopConfig& c : table.configs()) {
    for (Vertex r = 0; r < table.graph().order(); ++r)
      out.push_back({c.vector(), r, game_value_json(table.value_at(rank, r))});
    ++rank;
  }
  return out;
}

}  // namespace copthrottle
