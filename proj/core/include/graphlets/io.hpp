#pragma once

#include <string>

#include "graphlets/graph.hpp"

namespace graphlets {

enum class GraphFormat { EdgeList, Json, Auto };

/// Edge-list lines are "u v [w]" (w defaults to 1.0), '#' comments and blank
/// lines ignored. JSON is {"n": int, "edges": [[u,v,w],...]}. Vertex ids are
/// densified; the original ids are retained on the returned Graph.
Graph load_graph(const std::string& path, GraphFormat format = GraphFormat::Auto, GraphConfig config = {});

void save_edge_list(const Graph& g, const std::string& path);
std::string graph_to_json(const Graph& g);

/// Serialize a double with 17 significant digits (round-trip exact).
std::string format_double(double x);

}  // namespace graphlets
