#pragma once

#include <Eigen/Dense>

#include "graphlets/graph.hpp"
#include "graphlets/step.hpp"
#include "graphlets/subset_search.hpp"

namespace graphlets {

/// Integral of |mu1 - mu2| over degree-ascending lifts (the sorted
/// rearrangement attains the infimum over labelings).
double degree_distribution_distance(const Graph& g1, const Graph& g2);

struct SpectralDistanceReport {
  double value = 0.0;
  /// True when both lifted measures agree cell-wise on the common refinement;
  /// then `value` is the exact operator norm of the difference form. Otherwise
  /// `value` is the bound under the averaged measure and `degree_gap` carries
  /// the measure mismatch.
  bool shared_mu = true;
  double degree_gap = 0.0;
};

SpectralDistanceReport spectral_distance(const Graph& g1, const Graph& g2);

struct DiscReport {
  double value = 0.0;
  bool lower_bound = false;
  std::vector<int> witness_s;
  std::vector<int> witness_t;
};

struct DiscMode {
  bool exact = true;
  int samples = 10000;
  std::uint64_t seed = 0;
};

/// sup_{S,T} |E1(S,T)/sqrt(vol1(S)vol1(T)) - E2(S,T)/sqrt(vol2(S)vol2(T))|
/// over cell subsets of the common refinement.
DiscReport disc_distance(const Graph& g1, const Graph& g2, DiscMode mode = {});

/// sup_{S,T} |<chi_S, (Delta1 - Delta2) chi_T>_mu| / sqrt(mu(S) mu(T)) for a
/// given measure on the common refinement cells.
DiscReport disc_mu(const Graph& g1, const Graph& g2, const StepMeasure& mu, DiscMode mode = {});

/// (1/n^2) sup_{S,T} |E1(S,T) - E2(S,T)|; requires equal vertex counts.
DiscReport cut_distance(const Graph& g1, const Graph& g2, DiscMode mode = {});

/// Snap each entry to the nearest power of 4/5 from below:
/// h_j = sign(f_j) (4/5)^k with (4/5)^k <= |f_j| < (4/5)^{k-1}, h_j = 0 at 0.
/// Guarantees |h| <= |f| entrywise, hence ||h||_mu <= ||f||_mu and
/// ||f - h||_mu <= ||f||_mu / 4.
Eigen::VectorXd quantize_four_fifths(const Eigen::VectorXd& f, const StepMeasure& mu);

struct EquivalenceReport {
  double eps_disc = 0.0;
  bool disc_lower_bound = false;
  double eps_spec = 0.0;
  double degree_gap = 0.0;
  bool forward_ok = false;           // eps_disc <= eps_spec + 4 degree_gap
  bool reverse_applicable = false;   // eps_disc < 0.02
  bool reverse_ok = false;           // eps_spec <= 20 eps_disc ln(1/eps_disc)
};

EquivalenceReport equivalence_check(const Graph& g1, const Graph& g2, DiscMode mode = {});

}  // namespace graphlets
