#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "graphlets/graph.hpp"
#include "graphlets/rank_decomp.hpp"

namespace graphlets {

/// Independent edges with p_uv = w_u w_v / sum(w); isolated vertices trigger a
/// full resample (fresh counter salt), up to 100 attempts. Deterministic in
/// (weights, seed).
Graph chung_lu(const Eigen::VectorXd& weights, std::uint64_t seed);

struct UnionSample {
  Graph graph;               // A = sum of the part adjacencies
  std::vector<Graph> parts;  // the individual draws
  RankKSplit split;          // ground truth d_j(v) = part-j degree of v
};

/// Superimposed independent draws, one per weight vector, on a shared vertex
/// set; overlapping edges get summed weights.
UnionSample union_quasirandom(const std::vector<Eigen::VectorXd>& weight_lists, std::uint64_t seed);

/// Cross edges only, p_xy = wx_x wy_y / c with c chosen so the expected
/// volume equals sum(wx) + sum(wy).
Graph bipartite_quasirandom(const Eigen::VectorXd& wx, const Eigen::VectorXd& wy, std::uint64_t seed);

/// Each vertex becomes k twins (twin j of v gets id v*k + j); each edge
/// becomes a complete bipartite k x k pattern of the same weight between twin
/// classes, with no intra-class edges.
Graph blowup(const Graph& g, int k);

/// Basis of h*m vectors for the m-fold blow-up of an h-vertex graph: the h
/// primary columns replicate H's mu-orthogonal eigenfunctions across twin
/// blocks; the (m-1)*h complementary columns are block-supported discrete
/// cosine/sine patterns, zero-sum within their block and hence orthogonal to
/// every primary column under the uniform inner product.
Eigen::MatrixXd dense_universal_basis(const Graph& h, int m);

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph matching_graph(int pairs);

}  // namespace graphlets
