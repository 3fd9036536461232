#include "graphlets/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace graphlets {

Graph::Graph(Eigen::MatrixXd adj, GraphConfig config) : adj_(std::move(adj)), config_(config) {
  const int n = static_cast<int>(adj_.rows());
  deg_ = adj_.rowwise().sum();
  if (!config_.allow_loops) {
    for (int v = 0; v < n; ++v) {
      if (adj_(v, v) != 0.0) {
        throw ParseError("self-loop at vertex " + std::to_string(v) + " (loops disabled)");
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (deg_(v) <= 0.0) throw IsolatedVertex(v);
  }
  vol_ = deg_.sum();
  original_ids_.resize(n);
  std::iota(original_ids_.begin(), original_ids_.end(), 0LL);
}

Graph Graph::from_adjacency(Eigen::MatrixXd adjacency, GraphConfig config) {
  if (adjacency.rows() != adjacency.cols()) throw ParseError("adjacency matrix must be square");
  const int n = static_cast<int>(adjacency.rows());
  for (int u = 0; u < n; ++u) {
    for (int v = u; v < n; ++v) {
      if (adjacency(u, v) < 0.0) throw NegativeWeight("A(" + std::to_string(u) + "," + std::to_string(v) + ") < 0");
      if (std::abs(adjacency(u, v) - adjacency(v, u)) > 1e-12 * std::max(1.0, std::abs(adjacency(u, v)))) {
        throw ConflictingWeight("A(" + std::to_string(u) + "," + std::to_string(v) + ") != A(v,u)");
      }
    }
  }
  return Graph(std::move(adjacency), config);
}

Graph Graph::from_edges(int n, const std::vector<WeightedEdge>& edges, GraphConfig config) {
  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd seen = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw ParseError("edge endpoint out of range: " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    if (e.w < 0.0) throw NegativeWeight("edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    if (e.u == e.v && !config.allow_loops) {
      throw ParseError("self-loop at vertex " + std::to_string(e.u) + " (loops disabled)");
    }
    if (seen(e.u, e.v) != 0.0 && std::abs(adj(e.u, e.v) - e.w) > 1e-12 * std::max(1.0, e.w)) {
      throw ConflictingWeight("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                              " with conflicting weights");
    }
    seen(e.u, e.v) = seen(e.v, e.u) = 1.0;
    adj(e.u, e.v) = adj(e.v, e.u) = e.w;
  }
  return Graph(std::move(adj), config);
}

double Graph::volume(const std::vector<int>& s) const {
  double out = 0.0;
  for (int v : s) out += deg_(v);
  return out;
}

int Graph::component_count() const {
  const int n = this->n();
  std::vector<int> comp(n, -1);
  int count = 0;
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    comp[start] = count;
    stack.push_back(start);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        if (adj_(u, v) != 0.0 && comp[v] < 0) {
          comp[v] = count;
          stack.push_back(v);
        }
      }
    }
    ++count;
  }
  return count;
}

Graph Graph::scaled(double c) const {
  Graph out = Graph(adj_ * c, config_);
  out.original_ids_ = original_ids_;
  return out;
}

VertexMeasure degree_measure(const Graph& g) {
  return VertexMeasure{g.degrees() / g.volume()};
}

LabelingMap LabelingMap::identity(int n) {
  LabelingMap m;
  m.position.resize(n);
  std::iota(m.position.begin(), m.position.end(), 0);
  return m;
}

std::vector<int> LabelingMap::vertex_of_cell() const {
  std::vector<int> inv(position.size());
  for (int v = 0; v < static_cast<int>(position.size()); ++v) inv[position[v]] = v;
  return inv;
}

LabelingMap canonical_labeling(const Graph& g) {
  std::vector<int> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
  LabelingMap m;
  m.position.resize(g.n());
  for (int c = 0; c < g.n(); ++c) m.position[order[c]] = c;
  return m;
}

double incidence(const Graph& g, const std::vector<int>& s, const std::vector<int>& t) {
  double out = 0.0;
  for (int u : s) {
    for (int v : t) out += g.weight(u, v);
  }
  return out;
}

double mu_inner(const Graph& g, const Eigen::VectorXd& f, const Eigen::VectorXd& h) {
  return (f.array() * h.array() * g.degrees().array()).sum() / g.volume();
}

}  // namespace graphlets
