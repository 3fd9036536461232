#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "graphlets/errors.hpp"

namespace graphlets {

struct GraphConfig {
  bool allow_loops = false;
};

struct WeightedEdge {
  int u;
  int v;
  double w;
};

/// Weighted undirected graph with strictly positive degrees. Vertex ids are
/// 0..n-1; loaders densify arbitrary ids and keep the originals in a side map.
/// Immutable after construction; safe for concurrent reads.
class Graph {
public:
  static Graph from_edges(int n, const std::vector<WeightedEdge>& edges, GraphConfig config = {});
  static Graph from_adjacency(Eigen::MatrixXd adjacency, GraphConfig config = {});

  int n() const { return static_cast<int>(adj_.rows()); }
  double weight(int u, int v) const { return adj_(u, v); }
  const Eigen::MatrixXd& adjacency() const { return adj_; }
  double degree(int v) const { return deg_(v); }
  const Eigen::VectorXd& degrees() const { return deg_; }
  double volume() const { return vol_; }
  bool allows_loops() const { return config_.allow_loops; }

  /// Volume of a vertex subset: sum of degrees over S.
  double volume(const std::vector<int>& s) const;

  bool connected() const { return component_count() == 1; }
  int component_count() const;

  const std::vector<long long>& original_ids() const { return original_ids_; }
  void set_original_ids(std::vector<long long> ids) { original_ids_ = std::move(ids); }

  /// Rescale every edge weight by c > 0.
  Graph scaled(double c) const;

private:
  Graph(Eigen::MatrixXd adj, GraphConfig config);

  Eigen::MatrixXd adj_;
  Eigen::VectorXd deg_;
  double vol_ = 0.0;
  GraphConfig config_;
  std::vector<long long> original_ids_;
};

/// Probability measure mu(v) = d(v)/vol(G) on the vertices.
struct VertexMeasure {
  Eigen::VectorXd values;

  double total() const { return values.sum(); }
};

VertexMeasure degree_measure(const Graph& g);

/// A bijection of vertex ids onto positions 0..n-1 (cells of [0,1]).
struct LabelingMap {
  std::vector<int> position;  // position[v] = cell index of vertex v

  static LabelingMap identity(int n);
  /// Vertex v owning cell c, i.e. the inverse permutation.
  std::vector<int> vertex_of_cell() const;
};

/// Canonical labeling: vertices sorted by degree ascending, ties by id.
LabelingMap canonical_labeling(const Graph& g);

/// E(S,T) = sum over s in S, t in T of A(s,t), ordered pairs.
double incidence(const Graph& g, const std::vector<int>& s, const std::vector<int>& t);

/// mu-inner product <f,g>_mu = sum f(v) g(v) d(v)/vol.
double mu_inner(const Graph& g, const Eigen::VectorXd& f, const Eigen::VectorXd& h);

inline double mu_norm(const Graph& g, const Eigen::VectorXd& f) { return std::sqrt(mu_inner(g, f, f)); }

}  // namespace graphlets
