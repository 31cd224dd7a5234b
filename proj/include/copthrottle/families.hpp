#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "copthrottle/errors.hpp"
#include "copthrottle/graph.hpp"

namespace copthrottle {

/// Deterministic generator: mt19937_64 with plain modulo reduction, so the
/// same seed gives the same graph on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t bound) { return bound ? engine_() % bound : 0; }
  bool coin(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

inline Graph empty_graph(int n) {
  if (n < 0) throw InvalidInput("empty_graph: n must be non-negative");
  return Graph(n, "empty(" + std::to_string(n) + ")");
}

/// Vertices 0..n-1 in order.
inline Graph path_graph(int n) {
  if (n < 1) throw InvalidInput("path: n must be positive");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e, "path(" + std::to_string(n) + ")");
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw InvalidInput("cycle: n must be at least 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e, "cycle(" + std::to_string(n) + ")");
}

inline Graph complete_graph(int n) {
  if (n < 1) throw InvalidInput("complete: n must be positive");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e, "complete(" + std::to_string(n) + ")");
}

/// K_{1,s}: center 0, leaves 1..s.
inline Graph star_graph(int leaves) {
  if (leaves < 0) throw InvalidInput("star: leaf count must be non-negative");
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e, "star(" + std::to_string(leaves) + ")");
}

/// K_{a,b}: parts 0..a-1 and a..a+b-1.
inline Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw InvalidInput("complete_bipartite: parts must be non-empty");
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph::from_edges(a + b, e, "complete_bipartite(" + std::to_string(a) + "," + std::to_string(b) + ")");
}

/// Body 0; leg i is 1+i*len .. (i+1)*len, starting next to the body.
inline Graph spider(int legs, int len) {
  if (legs < 1 || len < 1) throw InvalidInput("spider: legs and len must be positive");
  std::vector<Edge> e;
  for (int i = 0; i < legs; ++i)
    for (int j = 0; j < len; ++j) e.emplace_back(j ? 1 + i * len + j - 1 : 0, 1 + i * len + j);
  return Graph::from_edges(1 + legs * len, e, "spider(" + std::to_string(legs) + "," + std::to_string(len) + ")");
}

/// Vertex (r, c) is r*cols + c.
inline Graph grid_graph(int rows, int cols) {
  if (rows < 1 || cols < 1) throw InvalidInput("grid: dimensions must be positive");
  std::vector<Edge> e;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(r * cols + c, r * cols + c + 1);
      if (r + 1 < rows) e.emplace_back(r * cols + c, (r + 1) * cols + c);
    }
  return Graph::from_edges(rows * cols, e, "grid(" + std::to_string(rows) + "," + std::to_string(cols) + ")");
}

/// Outer cycle 0..4, spokes i -- i+5, inner pentagram i+5 -- (i+2 mod 5)+5.
inline Graph petersen_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph::from_edges(10, e, "petersen");
}

/// Hamiltonian cycle 0..13 with chords from LCF notation [5,-5]^7.
inline Graph heawood_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 14; ++i) {
    e.emplace_back(i, (i + 1) % 14);
    if (i % 2 == 0) e.emplace_back(i, (i + 5) % 14);
  }
  return Graph::from_edges(14, e, "heawood");
}

/// M'(l): cycle 0-1-2-3-0; path i in {0,1,2} is 4+i*l .. 4+i*l+l-1 with its
/// first vertex joined to cycle vertex i. Order 3l+4.
inline Graph m_ell_prime(int l) {
  if (l < 1) throw InvalidInput("m_ell: l must be positive");
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  for (int i = 0; i < 3; ++i) {
    int base = 4 + i * l;
    e.emplace_back(i, base);
    for (int j = 0; j + 1 < l; ++j) e.emplace_back(base + j, base + j + 1);
  }
  return Graph::from_edges(3 * l + 4, e, "m_ell_prime(" + std::to_string(l) + ")");
}

/// Leaf of v gets id n+v.
inline Graph attach_leaves(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> e = g.edges();
  for (int v = 0; v < n; ++v) e.emplace_back(v, n + v);
  return Graph::from_edges(2 * n, e, "attach_leaves(" + g.name() + ")");
}

/// M(l) = M'(l) with a leaf on every vertex; leaf of v is 3l+4+v. Order 6l+8.
inline Graph m_ell(int l) { return attach_leaves(m_ell_prime(l)).renamed("m_ell(" + std::to_string(l) + ")"); }

/// Spider with `legs` legs of length `len` (body 0, numbering as in spider);
/// the end of leg i is joined to vertex 0 of a fresh copy of `core`, copy i
/// occupying 1 + legs*len + i*|core| onward.
inline Graph h_family(int legs, int len, const Graph& core) {
  if (legs < 3) throw InvalidInput("h_family: need at least 3 legs");
  if (len < 1) throw InvalidInput("h_family: leg length must be positive");
  if (core.order() < 1 || !is_connected(core)) throw InvalidInput("h_family: core must be connected and non-empty");
  Graph body = spider(legs, len);
  std::vector<Edge> e = body.edges();
  const int c = core.order();
  const int base = 1 + legs * len;
  for (int i = 0; i < legs; ++i) {
    int off = base + i * c;
    for (auto [u, v] : core.edges()) e.emplace_back(off + u, off + v);
    e.emplace_back(1 + i * len + len - 1, off);
  }
  return Graph::from_edges(base + legs * c, e,
                           "h_family(" + std::to_string(legs) + "," + std::to_string(len) + "," + core.name() + ")");
}

/// G plus a star K_{1,s} (center n, leaves n+1..n+s) joined to G by the
/// anchor edges, each with one end in G and one in the star.
inline Graph attach_star(const Graph& g, int s, const std::vector<Edge>& anchors) {
  const int n = g.order();
  if (s < 1) throw InvalidInput("attach_star: s must be positive");
  if (anchors.empty()) throw InvalidInput("attach_star: need at least one anchor edge");
  std::vector<Edge> e = g.edges();
  for (int i = 1; i <= s; ++i) e.emplace_back(n, n + i);
  for (auto [a, b] : anchors) {
    int lo = std::min(a, b), hi = std::max(a, b);
    if (lo < 0 || hi >= n + s + 1) throw InvalidInput("attach_star: anchor out of range");
    if (hi < n) throw InvalidInput("attach_star: anchor inside the copy of G would break its inducedness");
    if (lo >= n) throw InvalidInput("attach_star: anchor must join the star to G");
    e.emplace_back(lo, hi);
  }
  return Graph::from_edges(n + s + 1, e, "attach_star(" + g.name() + "," + std::to_string(s) + ")");
}

/// Random recursive tree: vertex i joins a uniform earlier vertex.
inline Graph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidInput("random_tree: n must be positive");
  Rng rng(seed);
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(static_cast<int>(rng.below(i)), i);
  return Graph::from_edges(n, e, "random_tree(" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")");
}

/// Vertex i joins a random non-empty part K of a random maximal clique Q of
/// the graph so far; i is simplicial, so the reverse insertion order is a
/// perfect elimination ordering.
inline Graph random_chordal(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidInput("random_chordal: n must be positive");
  Rng rng(seed);
  std::vector<std::vector<Vertex>> cliques{{0}};
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) {
    std::size_t qi = rng.below(cliques.size());
    const std::vector<Vertex> q = cliques[qi];
    std::vector<Vertex> k;
    for (Vertex v : q)
      if (rng.coin(1, 2)) k.push_back(v);
    if (k.empty()) k.push_back(q[rng.below(q.size())]);
    for (Vertex v : k) e.emplace_back(v, i);
    k.push_back(i);
    if (k.size() == q.size() + 1) cliques[qi] = k;
    else cliques.push_back(k);
  }
  return Graph::from_edges(n, e, "random_chordal(" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")");
}

/// Random tree plus each remaining pair with probability num/den.
inline Graph random_connected(int n, std::uint64_t seed, int num = 1, int den = 4) {
  if (n < 1) throw InvalidInput("random_connected: n must be positive");
  if (num < 0 || den < 1 || num > den) throw InvalidInput("random_connected: bad edge probability");
  Rng rng(seed);
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(static_cast<int>(rng.below(i)), i);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.coin(num, den)) e.emplace_back(u, v);
  return Graph::from_edges(n, e, "random_connected(" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")");
}

/// Family name plus integer parameters, e.g. {"spider", {{"legs",3},{"len",2}}}.
/// h_family and attach_* take their base graph through `core`.
struct FamilySpec {
  std::string family;
  std::map<std::string, long long> params;
  std::string core;  // nested spec text for h_family / attach_leaves / attach_star

  long long get(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw InvalidInput("family " + family + ": missing parameter " + key);
    return it->second;
  }
  long long get(const std::string& key, long long fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  }
};

namespace detail {

inline const std::map<std::string, std::vector<std::string>>& positional_keys() {
  static const std::map<std::string, std::vector<std::string>> keys{
      {"path", {"n"}},          {"cycle", {"n"}},          {"complete", {"n"}},
      {"empty", {"n"}},         {"star", {"s"}},           {"complete_bipartite", {"a", "b"}},
      {"spider", {"legs", "len"}}, {"grid", {"rows", "cols"}}, {"m_ell", {"l"}},
      {"m_ell_prime", {"l"}},   {"random_tree", {"n", "seed"}}, {"random_chordal", {"n", "seed"}},
      {"random_connected", {"n", "seed"}},
  };
  return keys;
}

// "path(5)", "spider(3,2)"; also "p5", "c4", "k5"
inline std::optional<std::string> expand_short_spec(const std::string& text) {
  static const std::regex call(R"(([a-z_]+)\(([0-9, ]*)\))");
  static const std::regex letter(R"(([pck])([0-9]+))");
  std::smatch m;
  if (std::regex_match(text, m, letter)) {
    const char* name = m[1] == "p" ? "path" : m[1] == "c" ? "cycle" : "complete";
    return std::string(name) + ":n=" + m[2].str();
  }
  if (!std::regex_match(text, m, call)) return std::nullopt;
  auto it = positional_keys().find(m[1]);
  if (it == positional_keys().end()) throw InvalidInput("family " + m[1].str() + " takes no positional parameters");
  std::vector<std::string> args;
  std::stringstream in(m[2].str());
  for (std::string a; std::getline(in, a, ',');) {
    a.erase(std::remove(a.begin(), a.end(), ' '), a.end());
    if (a.empty()) throw InvalidInput("empty parameter in " + text);
    args.push_back(a);
  }
  if (args.size() > it->second.size()) throw InvalidInput("too many parameters in " + text);
  std::string out = m[1].str();
  for (std::size_t i = 0; i < args.size(); ++i) out += (i ? "," : ":") + it->second[i] + "=" + args[i];
  return out;
}

}  // namespace detail

/// Parses "name" or "name:key=value,key=value". A key "core" takes the rest
/// of the text after it as a nested spec. Short forms "path(5)" and "c4" are
/// accepted too.
inline FamilySpec parse_family_spec(const std::string& text) {
  if (auto expanded = detail::expand_short_spec(text)) return parse_family_spec(*expanded);
  FamilySpec spec;
  auto colon = text.find(':');
  spec.family = text.substr(0, colon);
  if (spec.family.empty()) throw InvalidInput("empty family name");
  if (colon == std::string::npos) return spec;
  std::string rest = text.substr(colon + 1);
  while (!rest.empty()) {
    auto eq = rest.find('=');
    if (eq == std::string::npos) throw InvalidInput("family parameter without '=': " + rest);
    std::string key = rest.substr(0, eq);
    if (key == "core") {
      spec.core = rest.substr(eq + 1);
      break;
    }
    auto comma = rest.find(',', eq);
    std::string value = rest.substr(eq + 1, comma == std::string::npos ? std::string::npos : comma - eq - 1);
    try {
      std::size_t used = 0;
      spec.params[key] = std::stoll(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw InvalidInput("family parameter " + key + " is not an integer: " + value);
    }
    rest = comma == std::string::npos ? std::string() : rest.substr(comma + 1);
  }
  return spec;
}

inline int checked_int(long long v, const char* what) {
  if (v < 0 || v > 1'000'000) throw InvalidInput(std::string(what) + " out of range");
  return static_cast<int>(v);
}

inline Graph generate_named(const FamilySpec& spec) {
  const std::string& f = spec.family;
  auto p = [&](const char* key) { return checked_int(spec.get(key), key); };
  auto p_or = [&](const char* key, long long fallback) { return checked_int(spec.get(key, fallback), key); };
  auto seed = [&]() { return static_cast<std::uint64_t>(spec.get("seed", 0)); };
  auto core = [&]() -> Graph {
    if (spec.core.empty()) throw InvalidInput("family " + f + ": missing core=<spec>");
    return generate_named(parse_family_spec(spec.core));
  };
  if (f == "path") return path_graph(p("n"));
  if (f == "cycle") return cycle_graph(p("n"));
  if (f == "complete") return complete_graph(p("n"));
  if (f == "empty") return empty_graph(p("n"));
  if (f == "star") return star_graph(p("s"));
  if (f == "complete_bipartite") return complete_bipartite(p("a"), p("b"));
  if (f == "spider") return spider(p("legs"), p("len"));
  if (f == "grid") return grid_graph(p("rows"), p("cols"));
  if (f == "petersen") return petersen_graph();
  if (f == "heawood") return heawood_graph();
  if (f == "m_ell") return m_ell(p("l"));
  if (f == "m_ell_prime") return m_ell_prime(p("l"));
  if (f == "h_family") return h_family(p("legs"), p("len"), core());
  if (f == "random_tree") return random_tree(p("n"), seed());
  if (f == "random_chordal") return random_chordal(p("n"), seed());
  if (f == "random_connected") return random_connected(p("n"), seed(), p_or("num", 1), p_or("den", 4));
  if (f == "attach_leaves") return attach_leaves(core());
  if (f == "attach_star") {
    Graph base = core();
    int s = p("s");
    int anchor_star = p_or("star_vertex", 0);
    int anchor_g = p_or("anchor", 0);
    if (anchor_star > s) throw InvalidInput("attach_star: star_vertex must be in [0, s]");
    return attach_star(base, s, {{anchor_g, base.order() + anchor_star}});
  }
  throw InvalidInput("unknown family: " + f);
}

inline Graph generate_named(const std::string& text) { return generate_named(parse_family_spec(text)); }

}  // namespace copthrottle
