#pragma once

#include <Eigen/Dense>

#include "graphlets/graph.hpp"

namespace graphlets {

/// Eigenstructure of the normalized adjacency M = D^{-1/2} A D^{-1/2}.
/// rho is sorted descending; phi columns are the orthonormal eigenvectors of
/// M; combinatorial columns are D^{-1/2} phi (mu-orthogonal after scaling by
/// sqrt(vol)). Eigenvalues of Delta = I - D^{-1}A are 1 - rho_i.
struct SpectralSummary {
  Eigen::VectorXd rho;
  Eigen::MatrixXd phi;
  Eigen::MatrixXd combinatorial;
  double residual = 0.0;

  /// Multiplicity of rho = 1 within tol (equals the component count).
  int top_multiplicity(double tol = 1e-9) const;
};

SpectralSummary spectrum(const Graph& g);

/// Eigendecomposition of an arbitrary symmetric matrix with the same
/// deterministic ordering/orientation conventions (descending, first
/// significant eigenvector entry positive).
SpectralSummary symmetric_spectrum(const Eigen::MatrixXd& m);

/// Trace (I - Delta)^k = sum rho_i^k.
double trace_power(const Graph& g, int k);

/// Spectral norm of D^{-1/2} (A - B) D^{-1/2}.
double residual_norm(const Graph& g, const Eigen::MatrixXd& approximant);

/// <f, Delta g>_mu via the edge-sum form.
double quadratic_form(const Graph& g, const Eigen::VectorXd& f, const Eigen::VectorXd& h);

/// <f, Delta g>_mu via the matrix form (cross-check of the edge sum).
double quadratic_form_matrix(const Graph& g, const Eigen::VectorXd& f, const Eigen::VectorXd& h);

/// Rank-1 quasirandom comparator D J D / vol(G).
Eigen::MatrixXd rank1_approximant(const Graph& g);

}  // namespace graphlets
