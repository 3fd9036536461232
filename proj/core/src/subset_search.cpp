#include "graphlets/subset_search.hpp"

#include <cmath>
#include <limits>

#include "graphlets/errors.hpp"
#include "graphlets/rng.hpp"

namespace graphlets {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<int> mask_to_set(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1u) out.push_back(i);
  }
  return out;
}

PairSearchResult enumerate_all(const PairObjective& obj, int n) {
  const std::size_t km = obj.mats.size();
  const std::size_t kv = obj.vecs.size();
  const std::uint32_t full = (1u << n) - 1;

  // vec_sum[k][mask]
  std::vector<std::vector<double>> vec_sum(kv, std::vector<double>(full + 1, 0.0));
  for (std::size_t k = 0; k < kv; ++k) {
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      const int low = __builtin_ctz(mask);
      vec_sum[k][mask] = vec_sum[k][mask & (mask - 1)] + obj.vecs[k](low);
    }
  }
  // row_t[k][mask] = M_k * chi_T, built incrementally over T masks.
  std::vector<std::vector<Eigen::VectorXd>> row_t(km);
  for (std::size_t k = 0; k < km; ++k) {
    row_t[k].assign(full + 1, Eigen::VectorXd());
    row_t[k][0] = Eigen::VectorXd::Zero(n);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      const int low = __builtin_ctz(mask);
      row_t[k][mask] = row_t[k][mask & (mask - 1)] + obj.mats[k].col(low);
    }
  }

  PairSearchResult best;
  best.value = kNegInf;
  std::vector<double> msum(km), vs(kv), vt(kv);
  std::vector<std::vector<double>> bilin(km, std::vector<double>(full + 1, 0.0));
  for (std::uint32_t t = 1; t <= full; ++t) {
    for (std::size_t k = 0; k < kv; ++k) vt[k] = vec_sum[k][t];
    // bilinear sums over S, incremental in the S mask
    for (std::size_t k = 0; k < km; ++k) {
      const Eigen::VectorXd& r = row_t[k][t];
      std::vector<double>& b = bilin[k];
      for (std::uint32_t s = 1; s <= full; ++s) b[s] = b[s & (s - 1)] + r(__builtin_ctz(s));
    }
    for (std::uint32_t s = 1; s <= full; ++s) {
      for (std::size_t k = 0; k < km; ++k) msum[k] = bilin[k][s];
      for (std::size_t k = 0; k < kv; ++k) vs[k] = vec_sum[k][s];
      const double val = obj.eval(msum, vs, vt);
      if (val > best.value) {
        best.value = val;
        best.best_s = mask_to_set(s);
        best.best_t = mask_to_set(t);
      }
    }
  }
  if (best.value == kNegInf) best.value = 0.0;
  return best;
}

/// Membership-vector state for the sampled search, with incremental updates
/// of all bilinear/linear sums under single-element flips.
struct PairState {
  const PairObjective* obj;
  int n;
  std::vector<char> in_s, in_t;
  std::vector<double> msum, vs, vt;
  std::vector<Eigen::VectorXd> row_t;  // M_k * chi_T
  std::vector<Eigen::VectorXd> col_s;  // M_k^T * chi_S

  void rebuild() {
    const std::size_t km = obj->mats.size();
    const std::size_t kv = obj->vecs.size();
    Eigen::VectorXd chi_s = Eigen::VectorXd::Zero(n), chi_t = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) {
      chi_s(i) = in_s[i] ? 1.0 : 0.0;
      chi_t(i) = in_t[i] ? 1.0 : 0.0;
    }
    msum.resize(km);
    row_t.resize(km);
    col_s.resize(km);
    for (std::size_t k = 0; k < km; ++k) {
      row_t[k] = obj->mats[k] * chi_t;
      col_s[k] = obj->mats[k].transpose() * chi_s;
      msum[k] = chi_s.dot(row_t[k]);
    }
    vs.resize(kv);
    vt.resize(kv);
    for (std::size_t k = 0; k < kv; ++k) {
      vs[k] = obj->vecs[k].dot(chi_s);
      vt[k] = obj->vecs[k].dot(chi_t);
    }
  }

  double value() const { return obj->eval(msum, vs, vt); }

  void flip_s(int i) {
    const double sign = in_s[i] ? -1.0 : 1.0;
    in_s[i] = !in_s[i];
    for (std::size_t k = 0; k < obj->mats.size(); ++k) {
      msum[k] += sign * row_t[k](i);
      col_s[k] += sign * obj->mats[k].row(i).transpose();
    }
    for (std::size_t k = 0; k < obj->vecs.size(); ++k) vs[k] += sign * obj->vecs[k](i);
  }

  void flip_t(int i) {
    const double sign = in_t[i] ? -1.0 : 1.0;
    in_t[i] = !in_t[i];
    for (std::size_t k = 0; k < obj->mats.size(); ++k) {
      msum[k] += sign * col_s[k](i);
      row_t[k] += sign * obj->mats[k].col(i);
    }
    for (std::size_t k = 0; k < obj->vecs.size(); ++k) vt[k] += sign * obj->vecs[k](i);
  }
};

PairSearchResult sampled_search(const PairObjective& obj, int n, const PairSearchConfig& config) {
  PairSearchResult best;
  best.value = kNegInf;
  best.lower_bound = true;
  PairState state;
  state.obj = &obj;
  state.n = n;
  // a handful of random restarts get the hill climb; the rest are plain draws
  const int climbs = std::min(config.samples, 8);
  for (int sample = 0; sample < config.samples; ++sample) {
    std::uint64_t counter = static_cast<std::uint64_t>(sample) * (2 * n + 16);
    state.in_s.assign(n, 0);
    state.in_t.assign(n, 0);
    for (int i = 0; i < n; ++i) {
      state.in_s[i] = rng::u01(config.seed, counter++) < 0.5;
      state.in_t[i] = rng::u01(config.seed, counter++) < 0.5;
    }
    state.rebuild();
    double val = state.value();
    if (sample < climbs) {
      for (int pass = 0; pass < 20; ++pass) {
        bool improved = false;
        for (int i = 0; i < n; ++i) {
          state.flip_s(i);
          double next = state.value();
          if (next > val + 1e-15) {
            val = next;
            improved = true;
          } else {
            state.flip_s(i);
          }
          state.flip_t(i);
          next = state.value();
          if (next > val + 1e-15) {
            val = next;
            improved = true;
          } else {
            state.flip_t(i);
          }
        }
        if (!improved) break;
      }
    }
    if (val > best.value) {
      best.value = val;
      best.best_s.clear();
      best.best_t.clear();
      for (int i = 0; i < n; ++i) {
        if (state.in_s[i]) best.best_s.push_back(i);
        if (state.in_t[i]) best.best_t.push_back(i);
      }
    }
  }
  if (best.value == kNegInf) best.value = 0.0;
  return best;
}

}  // namespace

PairSearchResult maximize_over_pairs(const PairObjective& obj, int ground_size, const PairSearchConfig& config) {
  if (config.exact) {
    if (ground_size > config.exact_limit) {
      throw ExactModeTooLarge("exact subset enumeration over " + std::to_string(ground_size) + " elements (limit " +
                              std::to_string(config.exact_limit) + "); use sampled mode");
    }
    return enumerate_all(obj, ground_size);
  }
  return sampled_search(obj, ground_size, config);
}

}  // namespace graphlets
