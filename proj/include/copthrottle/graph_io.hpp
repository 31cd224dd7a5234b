#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "copthrottle/errors.hpp"
#include "copthrottle/graph.hpp"

namespace copthrottle {

/// {"name": string?, "n": int, "edges": [[u,v], ...]} with u < v.
inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  if (!g.name().empty()) j["name"] = g.name();
  j["n"] = g.order();
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j;
}

inline Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInput("graph JSON: expected an object");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw InvalidInput("graph JSON: missing integer field \"n\"");
  const int n = j["n"].get<int>();
  if (n < 0) throw InvalidInput("graph JSON: negative n");
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw InvalidInput("graph JSON: \"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw InvalidInput("graph JSON: each edge must be [u, v]");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw InvalidInput("graph JSON: \"name\" must be a string");
    name = j["name"].get<std::string>();
  }
  return Graph::from_edges(n, edges, name);
}

inline Graph parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("graph JSON parse error: ") + e.what());
  }
  return graph_from_json(j);
}

/// First line "n m", then m lines "u v".
inline Graph parse_edge_list(std::istream& in, std::string name = {}) {
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw InvalidInput("edge list: expected header \"n m\"");
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    long long u, v;
    if (!(in >> u >> v)) throw InvalidInput("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph::from_edges(static_cast<int>(n), edges, std::move(name));
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

/// graph6 (the nauty/networkx format). An optional ">>graph6<<" header is accepted.
inline Graph parse_graph6(std::string line, std::string name = {}) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ')) line.pop_back();
  const std::string header = ">>graph6<<";
  if (line.rfind(header, 0) == 0) line.erase(0, header.size());
  if (line.empty()) throw InvalidInput("graph6: empty line");
  for (char c : line)
    if (c < 63 || c > 126) throw InvalidInput("graph6: byte out of range");
  std::size_t pos = 0;
  auto byte = [&]() -> long long {
    if (pos >= line.size()) throw InvalidInput("graph6: truncated");
    return line[pos++] - 63;
  };
  long long n = byte();
  if (n == 63) {
    if (pos < line.size() && line[pos] == 126) {
      ++pos;
      n = 0;
      for (int i = 0; i < 6; ++i) n = (n << 6) | byte();
    } else {
      n = 0;
      for (int i = 0; i < 3; ++i) n = (n << 6) | byte();
    }
  }
  if (n > 100000) throw InvalidInput("graph6: order too large");
  std::vector<Edge> edges;
  long long bit = 0;
  long long needed = n * (n - 1) / 2;
  long long have = static_cast<long long>(line.size() - pos) * 6;
  if (have < needed) throw InvalidInput("graph6: truncated adjacency data");
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit) {
      int value = line[pos + bit / 6] - 63;
      if ((value >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
    }
  return Graph::from_edges(static_cast<int>(n), edges, std::move(name));
}

inline std::string to_graph6(const Graph& g) {
  std::string out;
  const long long n = g.order();
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out += "\x7e\x7e";
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
  int acc = 0, bits = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  if (bits) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

/// One graph6 string per non-empty line.
inline std::vector<Graph> read_graph6_file(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  int index = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    out.push_back(parse_graph6(line, "g6#" + std::to_string(index++)));
  }
  return out;
}

inline std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph " << (g.name().empty() ? "G" : "\"" + g.name() + "\"") << " {\n";
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

/// Reads a graph file, choosing the parser by content: JSON object, graph6
/// (single token), or edge list.
inline Graph read_graph(std::istream& in, std::string name = {}) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw InvalidInput("empty graph input");
  if (text[first] == '{') {
    Graph g = parse_graph_json(text);
    return g.name().empty() ? g.renamed(std::move(name)) : g;
  }
  std::istringstream probe(text);
  std::string token;
  probe >> token;
  bool numeric = !token.empty() && token.find_first_not_of("0123456789") == std::string::npos;
  if (!numeric) return parse_graph6(token, std::move(name));
  std::istringstream edges(text);
  return parse_edge_list(edges, std::move(name));
}

}  // namespace copthrottle
