#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

namespace graphlets {

/// Maximization of a set-pair functional built from bilinear sums
/// m_k = sum_{s in S, t in T} M_k(s,t) and linear sums over S and T of the
/// given vectors. Every discrepancy-style supremum in this library has this
/// shape, so the enumeration / sampling machinery lives here once.
struct PairObjective {
  std::vector<Eigen::MatrixXd> mats;
  std::vector<Eigen::VectorXd> vecs;
  /// eval(mat_sums, vec_sums_over_S, vec_sums_over_T); return -inf to reject
  /// (e.g. zero-volume subset).
  std::function<double(const std::vector<double>&, const std::vector<double>&, const std::vector<double>&)> eval;
};

struct PairSearchConfig {
  bool exact = true;
  int samples = 10000;
  std::uint64_t seed = 0;
  /// Exact enumeration refuses above this many ground-set elements.
  int exact_limit = 12;
};

struct PairSearchResult {
  double value = 0.0;
  bool lower_bound = false;  // true when sampled (max over a subset of pairs)
  std::vector<int> best_s;
  std::vector<int> best_t;
};

/// Max over all nonempty (S,T) when exact (throws ExactModeTooLarge past the
/// limit); otherwise seeded random pairs plus single-flip hill climbing.
PairSearchResult maximize_over_pairs(const PairObjective& obj, int ground_size, const PairSearchConfig& config);

}  // namespace graphlets
