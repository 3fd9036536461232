#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "graphlets/graph.hpp"
#include "graphlets/step.hpp"

namespace graphlets {

/// d(v) = d'(v) + d''(v), both nonnegative, witnessing a union of two
/// quasirandom parts; alpha = vol'/vol.
struct DegreeSplit {
  Eigen::VectorXd d_prime;
  Eigen::VectorXd d_doubleprime;
  double alpha = 0.0;
};

/// d(v) = sum_i parts[i](v), all nonnegative.
struct RankKSplit {
  std::vector<Eigen::VectorXd> parts;
};

/// The rank-2 comparator D'JD'/vol' + D''JD''/vol'' conjugated by D^{-1/2}
/// has nonzero spectrum {1, eta} with
///   eta = 1 - (sum_v d'(v) d''(v)/d(v)) * vol / (vol' vol'')
/// and eigenvector xi(v) = d(v)^{-1/2} (d'(v)/vol' - d''(v)/vol'') for eta.
std::pair<double, Eigen::VectorXd> rank2_eta_xi(const Graph& g, const DegreeSplit& split);

Eigen::MatrixXd rank2_approximant(const Graph& g, const DegreeSplit& split);

struct UnionSpectrumReport {
  double eps1 = 0.0;        // spectral certificate of part 1
  double eps2 = 0.0;        // spectral certificate of part 2
  double eps = 0.0;         // eps1 + eps2
  double rho0 = 0.0;
  double rho1 = 0.0;
  double eta = 0.0;         // closed-form prediction for rho1
  double max_tail = 0.0;    // max |rho_i|, i >= 2
  double alignment_gap = 0.0;  // 1 - |<phi_1, xi/||xi||>|
  bool ok_rho0 = false;
  bool ok_rho1 = false;
  bool ok_tail = false;
  bool ok_alignment = false;
};

/// Checks the union A1 + A2 of two quasirandom graphs against the predicted
/// rank-2 spectrum (top eigenvalue 1, second eigenvalue eta, small tail,
/// second eigenvector aligned with xi).
UnionSpectrumReport union_spectrum_check(const Graph& g1, const Graph& g2);

struct Rank2Diagnostics {
  double alpha = 0.0;
  double rho1 = 0.0;
  double eta = 0.0;          // closed-form eta of the recovered split
  double residual = 0.0;     // spectral residual against the rank-2 comparator
  double balance_gap = 0.0;  // |sum_X |f1| - sum_Y |f2|| at the returned alpha
  double frow_gap = 0.0;     // |(1-rho1) - (1/(a(1-a)vol)) sum f1 f2 / d|
};

/// Recover a degree split from the top nontrivial eigenpair: f1/f2 from the
/// eigenvector, alpha from the balance condition by bisection, clipping f1 to
/// 0 on X = {f1 < 0} and to d on Y = {f2 < 0}. Output canonicalized so
/// alpha <= 1/2.
std::pair<DegreeSplit, Rank2Diagnostics> rank2_decompose(const Graph& g, double gap_min = 1e-6);

/// Part measures mu_1 = mu (1 + sqrt((1-a) rho / a) phi), mu_2 = mu
/// (1 - sqrt(a rho / (1-a)) phi) with ||phi||_mu = 1, oriented so mu_1 tracks
/// d'/vol'; satisfies mu = alpha mu_1 + (1-alpha) mu_2 identically. Returned
/// on the canonical degree-sorted cells.
std::pair<StepMeasure, StepMeasure> split_measures(const Graph& g, const DegreeSplit& split);

/// M(i,j) = sum_v d_i(v) d_j(v) / d(v).
Eigen::MatrixXd rank_k_matrix(const Graph& g, const RankKSplit& split);

/// Nonzero eigenpairs (eta_i, xi_i) of X = D^{-1/2}(sum_j D_jJD_j/vol_j)D^{-1/2},
/// obtained from the k x k reduced problem V^{-1/2} M V^{-1/2}.
std::vector<std::pair<double, Eigen::VectorXd>> rank_k_eigs(const Graph& g, const RankKSplit& split);

Eigen::MatrixXd rank_k_approximant(const Graph& g, const RankKSplit& split);

double rank_k_residual(const Graph& g, const RankKSplit& split);

}  // namespace graphlets
