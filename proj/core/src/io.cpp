#include "graphlets/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace graphlets {

namespace {

struct RawEdge {
  long long u;
  long long v;
  double w;
};

Graph densify(const std::vector<RawEdge>& raw, GraphConfig config) {
  std::map<long long, int> id_map;
  for (const auto& e : raw) {
    id_map.emplace(e.u, 0);
    id_map.emplace(e.v, 0);
  }
  std::vector<long long> originals;
  originals.reserve(id_map.size());
  for (auto& [id, dense] : id_map) {
    dense = static_cast<int>(originals.size());
    originals.push_back(id);
  }
  std::vector<WeightedEdge> edges;
  edges.reserve(raw.size());
  for (const auto& e : raw) {
    edges.push_back({id_map[e.u], id_map[e.v], e.w});
  }
  try {
    Graph g = Graph::from_edges(static_cast<int>(originals.size()), edges, config);
    g.set_original_ids(std::move(originals));
    return g;
  } catch (const IsolatedVertex&) {
    // report the original id, not the densified one
    std::vector<double> deg(originals.size(), 0.0);
    for (const auto& e : edges) {
      deg[e.u] += e.w;
      if (e.u != e.v) deg[e.v] += e.w;
    }
    for (std::size_t v = 0; v < deg.size(); ++v) {
      if (deg[v] <= 0.0) throw IsolatedVertex(originals[v]);
    }
    throw;
  }
}

Graph load_edge_list(const std::string& path, GraphConfig config) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::vector<RawEdge> raw;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u)) {
      std::string any;
      std::istringstream check(line);
      if (check >> any) throw ParseError(path + ":" + std::to_string(lineno) + ": expected \"u v [w]\"");
      continue;  // blank
    }
    double w = 1.0;
    if (!(ls >> v)) throw ParseError(path + ":" + std::to_string(lineno) + ": expected \"u v [w]\"");
    if (!(ls >> w)) ls.clear();  // optional weight; leftovers are trailing tokens
    std::string trailing;
    if (ls >> trailing) throw ParseError(path + ":" + std::to_string(lineno) + ": trailing tokens");
    if (u < 0 || v < 0) throw ParseError(path + ":" + std::to_string(lineno) + ": negative vertex id");
    if (w < 0.0) throw NegativeWeight(path + ":" + std::to_string(lineno));
    raw.push_back({u, v, w});
  }
  if (raw.empty()) throw ParseError(path + ": no edges");
  return densify(raw, config);
}

Graph load_json(const std::string& path, GraphConfig config) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (!j.contains("n") || !j.contains("edges")) throw ParseError(path + ": expected {\"n\":..., \"edges\":[...]}");
  const int n = j["n"].get<int>();
  std::vector<WeightedEdge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() < 2) throw ParseError(path + ": bad edge entry");
    double w = e.size() > 2 ? e[2].get<double>() : 1.0;
    edges.push_back({e[0].get<int>(), e[1].get<int>(), w});
  }
  return Graph::from_edges(n, edges, config);
}

}  // namespace

Graph load_graph(const std::string& path, GraphFormat format, GraphConfig config) {
  if (format == GraphFormat::Auto) {
    format = path.size() > 5 && path.substr(path.size() - 5) == ".json" ? GraphFormat::Json : GraphFormat::EdgeList;
  }
  return format == GraphFormat::Json ? load_json(path, config) : load_edge_list(path, config);
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void save_edge_list(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  const auto& ids = g.original_ids();
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u; v < g.n(); ++v) {
      if (g.weight(u, v) != 0.0) {
        out << ids[u] << ' ' << ids[v] << ' ' << format_double(g.weight(u, v)) << '\n';
      }
    }
  }
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.n();
  auto edges = nlohmann::json::array();
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u; v < g.n(); ++v) {
      if (g.weight(u, v) != 0.0) edges.push_back({u, v, g.weight(u, v)});
    }
  }
  j["edges"] = std::move(edges);
  return j.dump();
}

}  // namespace graphlets
