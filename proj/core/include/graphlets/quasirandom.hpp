#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "graphlets/distances.hpp"
#include "graphlets/graph.hpp"

namespace graphlets {

enum class QrProperty { SpectralIv, DiscrepancyV, TraceVi, BipartiteIv, BipartiteV };

std::string qr_property_name(QrProperty p);

struct Certificate {
  QrProperty property;
  double epsilon = 0.0;
  /// Discrepancy-type certificates from sampling are lower bounds; spectral
  /// and trace certificates are always exact.
  bool exact = true;
  // witness data, filled per property kind
  std::vector<int> witness_s;
  std::vector<int> witness_t;
  double witness_eigenvalue = 0.0;
  Eigen::VectorXd witness_vector;
  double trace_value = 0.0;
  int trace_k = 0;
};

/// eps = || D^{-1/2} (A - D J D / vol) D^{-1/2} ||, with the extremal
/// eigenpair of the residual as witness.
Certificate qr_epsilon_spectral(const Graph& g);

/// eps = max over nonempty S,T of |E(S,T) - vol(S)vol(T)/vol| / sqrt(vol(S)vol(T)).
Certificate qr_epsilon_discrepancy(const Graph& g, DiscMode mode = {});

/// eps = |sum_i rho_i^k - 1| for even k >= 2.
Certificate qr_trace_defect(const Graph& g, int k = 4);

struct BipartiteOptions {
  /// The corrected comparator uses 2 d_x d_y / vol on cross pairs (so that
  /// complete bipartite graphs certify at eps = 0); the literal variant drops
  /// the factor 2.
  bool paper_literal = false;
};

Certificate bipartite_epsilon_spectral(const Graph& g, const std::vector<int>& x, BipartiteOptions opts = {});

Certificate bipartite_epsilon_discrepancy(const Graph& g, const std::vector<int>& x, DiscMode mode = {},
                                          BipartiteOptions opts = {});

/// The cross-pair comparator used by the bipartite certificates.
Eigen::MatrixXd bipartite_approximant(const Graph& g, const std::vector<int>& x, BipartiteOptions opts = {});

}  // namespace graphlets
