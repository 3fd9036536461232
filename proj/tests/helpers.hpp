#pragma once

#include <Eigen/Dense>
#include <vector>

#include "graphlets/graph.hpp"
#include "graphlets/rank_decomp.hpp"
#include "graphlets/rng.hpp"

namespace test_helpers {

using graphlets::Graph;
using graphlets::GraphConfig;
using graphlets::WeightedEdge;

/// Connected random weighted graph: a random spanning tree plus extra random
/// edges, weights in [0.1, 2).
inline Graph random_weighted_graph(int n, graphlets::rng::Stream& rng, double extra_edge_p = 0.4) {
  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n, n);
  for (int v = 1; v < n; ++v) {
    const int u = static_cast<int>(rng.next_below(v));
    adj(u, v) = adj(v, u) = 0.1 + 1.9 * rng.next_u01();
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (adj(u, v) == 0.0 && rng.next_u01() < extra_edge_p) {
        adj(u, v) = adj(v, u) = 0.1 + 1.9 * rng.next_u01();
      }
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

/// Random degree split of an existing graph with all parts strictly interior.
inline graphlets::DegreeSplit random_interior_split(const Graph& g, graphlets::rng::Stream& rng) {
  graphlets::DegreeSplit split;
  split.d_prime.resize(g.n());
  for (int v = 0; v < g.n(); ++v) split.d_prime(v) = (0.1 + 0.8 * rng.next_u01()) * g.degree(v);
  split.d_doubleprime = g.degrees() - split.d_prime;
  split.alpha = split.d_prime.sum() / g.volume();
  return split;
}

struct ExactRank2 {
  Graph graph;
  graphlets::DegreeSplit split;
  double eta;
};

/// Exact rank-2 weighted graph A = d'd'^T/vol' + d''d''^T/vol'' built from a
/// split with nonempty zero set (d'=0), full set (d'=d), and interior, so the
/// balance condition pins alpha uniquely.
inline ExactRank2 exact_rank2_instance(int n, graphlets::rng::Stream& rng) {
  while (true) {
    Eigen::VectorXd d(n), dp(n);
    int zeros = 0, fulls = 0, interior = 0;
    for (int v = 0; v < n; ++v) {
      d(v) = 0.5 + 2.5 * rng.next_u01();
      const double u = rng.next_u01();
      if (u < 0.3) {
        dp(v) = 0.0;
        ++zeros;
      } else if (u < 0.6) {
        dp(v) = d(v);
        ++fulls;
      } else {
        dp(v) = (0.2 + 0.6 * rng.next_u01()) * d(v);
        ++interior;
      }
    }
    if (zeros == 0 || fulls == 0 || interior == 0) continue;
    graphlets::DegreeSplit split;
    split.d_prime = dp;
    split.d_doubleprime = d - dp;
    split.alpha = dp.sum() / d.sum();
    const Eigen::MatrixXd adj = split.d_prime * split.d_prime.transpose() / split.d_prime.sum() +
                                split.d_doubleprime * split.d_doubleprime.transpose() / split.d_doubleprime.sum();
    GraphConfig config;
    config.allow_loops = true;
    Graph g = Graph::from_adjacency(adj, config);
    auto [eta, xi] = rank2_eta_xi(g, split);
    if (eta < 1e-4 || eta > 1.0 - 1e-4) continue;
    return {std::move(g), std::move(split), eta};
  }
}

inline std::vector<int> all_vertices(const Graph& g) {
  std::vector<int> out(g.n());
  for (int v = 0; v < g.n(); ++v) out[v] = v;
  return out;
}

}  // namespace test_helpers
