#include "graphlets/rank_decomp.hpp"

#include <algorithm>
#include <cmath>

#include "graphlets/quasirandom.hpp"
#include "graphlets/spectral.hpp"

namespace graphlets {

namespace {

void validate_split(const Graph& g, const DegreeSplit& split) {
  if (split.d_prime.size() != g.n() || split.d_doubleprime.size() != g.n()) {
    throw InvalidSplit("split vectors must have length n");
  }
  for (int v = 0; v < g.n(); ++v) {
    if (split.d_prime(v) < -1e-10 || split.d_doubleprime(v) < -1e-10) {
      throw InvalidSplit("negative part degree at vertex " + std::to_string(v));
    }
    if (std::abs(split.d_prime(v) + split.d_doubleprime(v) - g.degree(v)) > 1e-8 * std::max(1.0, g.degree(v))) {
      throw InvalidSplit("parts do not sum to the degree at vertex " + std::to_string(v));
    }
  }
}

void validate_split(const Graph& g, const RankKSplit& split) {
  if (split.parts.empty()) throw InvalidSplit("need at least one part");
  Eigen::VectorXd total = Eigen::VectorXd::Zero(g.n());
  for (const auto& part : split.parts) {
    if (part.size() != g.n()) throw InvalidSplit("part vectors must have length n");
    if (part.minCoeff() < -1e-10) throw InvalidSplit("negative part degree");
    total += part;
  }
  for (int v = 0; v < g.n(); ++v) {
    if (std::abs(total(v) - g.degree(v)) > 1e-8 * std::max(1.0, g.degree(v))) {
      throw InvalidSplit("parts do not sum to the degree at vertex " + std::to_string(v));
    }
  }
}

/// Orient so the coordinate of largest magnitude is positive (first such
/// index on ties).
Eigen::VectorXd orient_by_peak(Eigen::VectorXd v) {
  int peak = 0;
  for (int i = 1; i < v.size(); ++i) {
    if (std::abs(v(i)) > std::abs(v(peak)) + 1e-15) peak = i;
  }
  if (v(peak) < 0.0) v = -v;
  return v;
}

}  // namespace

std::pair<double, Eigen::VectorXd> rank2_eta_xi(const Graph& g, const DegreeSplit& split) {
  validate_split(g, split);
  const double vol1 = split.d_prime.sum();
  const double vol2 = split.d_doubleprime.sum();
  if (vol1 <= 0.0 || vol2 <= 0.0) throw DegeneratePart("both parts need positive volume");
  double cross = 0.0;
  for (int v = 0; v < g.n(); ++v) cross += split.d_prime(v) * split.d_doubleprime(v) / g.degree(v);
  const double eta = 1.0 - cross * g.volume() / (vol1 * vol2);
  Eigen::VectorXd xi(g.n());
  for (int v = 0; v < g.n(); ++v) {
    xi(v) = (split.d_prime(v) / vol1 - split.d_doubleprime(v) / vol2) / std::sqrt(g.degree(v));
  }
  if (xi.norm() > 1e-9) {
    const Eigen::MatrixXd x_mat = rank2_approximant(g, split);
    const Eigen::VectorXd dinv_sqrt = g.degrees().array().rsqrt();
    const Eigen::MatrixXd x_norm = dinv_sqrt.asDiagonal() * x_mat * dinv_sqrt.asDiagonal();
    const double check = (x_norm * xi - eta * xi).norm() / xi.norm();
    if (check > 1e-7) throw NumericalFailure("rank-2 eigenvector identity violated by " + std::to_string(check));
  }
  return {eta, xi};
}

Eigen::MatrixXd rank2_approximant(const Graph& g, const DegreeSplit& split) {
  const double vol1 = split.d_prime.sum();
  const double vol2 = split.d_doubleprime.sum();
  if (vol1 <= 0.0 || vol2 <= 0.0) throw DegeneratePart("both parts need positive volume");
  return split.d_prime * split.d_prime.transpose() / vol1 +
         split.d_doubleprime * split.d_doubleprime.transpose() / vol2;
}

UnionSpectrumReport union_spectrum_check(const Graph& g1, const Graph& g2) {
  if (g1.n() != g2.n()) {
    throw VertexCountMismatch("union check needs a shared vertex set (" + std::to_string(g1.n()) + " vs " +
                              std::to_string(g2.n()) + ")");
  }
  GraphConfig config;
  config.allow_loops = g1.allows_loops() || g2.allows_loops();
  const Graph u = Graph::from_adjacency(g1.adjacency() + g2.adjacency(), config);

  UnionSpectrumReport rep;
  rep.eps1 = qr_epsilon_spectral(g1).epsilon;
  rep.eps2 = qr_epsilon_spectral(g2).epsilon;
  rep.eps = rep.eps1 + rep.eps2;

  DegreeSplit split;
  split.d_prime = g1.degrees();
  split.d_doubleprime = g2.degrees();
  split.alpha = g1.volume() / u.volume();
  auto [eta, xi] = rank2_eta_xi(u, split);
  rep.eta = eta;

  const SpectralSummary s = spectrum(u);
  rep.rho0 = s.rho(0);
  rep.rho1 = s.rho(1);
  rep.max_tail = 0.0;
  for (int i = 2; i < s.rho.size(); ++i) rep.max_tail = std::max(rep.max_tail, std::abs(s.rho(i)));
  rep.alignment_gap = xi.norm() > 0.0 ? 1.0 - std::abs(s.phi.col(1).dot(xi) / xi.norm()) : 0.0;

  rep.ok_rho0 = std::abs(rep.rho0 - 1.0) <= 1e-9;
  rep.ok_rho1 = std::abs(rep.rho1 - eta) <= rep.eps;
  rep.ok_tail = rep.max_tail <= rep.eps;
  rep.ok_alignment = rep.alignment_gap <= 2.0 * rep.eps;
  return rep;
}

std::pair<DegreeSplit, Rank2Diagnostics> rank2_decompose(const Graph& g, double gap_min) {
  if (!g.connected()) throw NotConnected("decomposition needs a connected graph");
  const SpectralSummary s = spectrum(g);
  const double rho1 = s.rho(1);
  if (rho1 <= gap_min) {
    throw SpectralGapTooSmall("rho_1 = " + std::to_string(rho1) +
                              " <= " + std::to_string(gap_min) +
                              ": the graph is rank-1 (quasirandom) or near-bipartite; nothing to split");
  }
  if (rho1 >= 1.0 - gap_min) {
    throw SpectralGapTooSmall("rho_1 = " + std::to_string(rho1) + " is too close to 1 (near-disconnected)");
  }

  const Eigen::VectorXd phi1 = orient_by_peak(s.phi.col(1));
  const Eigen::VectorXd d = g.degrees();
  const Eigen::VectorXd sqrt_d = d.cwiseSqrt();
  const double vol = g.volume();

  auto f1_of = [&](double a) -> Eigen::VectorXd {
    return a * d - sqrt_d.cwiseProduct(phi1) * std::sqrt(rho1 * a * (1.0 - a) * vol);
  };
  // balance objective: mass of f1 below 0 minus mass of f2 below 0; positive
  // near alpha = 0, negative near alpha = 1
  auto balance = [&](double a) {
    const Eigen::VectorXd f1 = f1_of(a);
    double out = 0.0;
    for (int v = 0; v < g.n(); ++v) {
      const double f2 = d(v) - f1(v);
      if (f1(v) < 0.0) out += -f1(v);
      if (f2 < 0.0) out -= -f2;
    }
    return out;
  };

  double lo = 1e-9, hi = 1.0 - 1e-9;
  double g_lo = balance(lo), g_hi = balance(hi);
  if (!(g_lo >= 0.0 && g_hi <= 0.0)) {
    throw BalanceNotBracketed("balance objective is " + std::to_string(g_lo) + " at alpha->0 and " +
                              std::to_string(g_hi) + " at alpha->1");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    (balance(mid) >= 0.0 ? lo : hi) = mid;
  }
  const double alpha = 0.5 * (lo + hi);

  const Eigen::VectorXd f1 = f1_of(alpha);
  const Eigen::VectorXd f2 = d - f1;
  DegreeSplit split;
  split.d_prime.resize(g.n());
  for (int v = 0; v < g.n(); ++v) {
    if (f1(v) < 0.0) {
      split.d_prime(v) = 0.0;
    } else if (f2(v) < 0.0) {
      split.d_prime(v) = d(v);
    } else {
      split.d_prime(v) = f1(v);
    }
  }
  split.d_doubleprime = d - split.d_prime;
  split.alpha = alpha;

  Rank2Diagnostics diag;
  diag.rho1 = rho1;
  diag.balance_gap = std::abs(balance(alpha));
  double frow = 0.0;
  for (int v = 0; v < g.n(); ++v) frow += f1(v) * f2(v) / d(v);
  diag.frow_gap = std::abs((1.0 - rho1) - frow / (alpha * (1.0 - alpha) * vol));

  if (split.alpha > 0.5) {
    std::swap(split.d_prime, split.d_doubleprime);
    split.alpha = 1.0 - split.alpha;
  }
  diag.alpha = split.alpha;
  diag.eta = rank2_eta_xi(g, split).first;
  diag.residual = residual_norm(g, rank2_approximant(g, split));
  return {split, diag};
}

std::pair<StepMeasure, StepMeasure> split_measures(const Graph& g, const DegreeSplit& split) {
  validate_split(g, split);
  const SpectralSummary s = spectrum(g);
  const double rho = s.rho(1);
  const double a = split.alpha;
  if (a <= 0.0 || a >= 1.0) throw InvalidSplit("alpha must lie in (0,1)");
  if (rho < 0.0) throw SpectralGapTooSmall("rho_1 < 0: no positive-rank split measures");
  const double vol = g.volume();
  // mu-normalized eigenfunction, oriented to track d'/vol' - d''/vol''
  Eigen::VectorXd phi_mu = std::sqrt(vol) * g.degrees().array().rsqrt().matrix().cwiseProduct(s.phi.col(1));
  const double vol1 = split.d_prime.sum();
  const double vol2 = split.d_doubleprime.sum();
  double corr = 0.0;
  for (int v = 0; v < g.n(); ++v) {
    corr += (split.d_prime(v) / vol1 - split.d_doubleprime(v) / vol2) * phi_mu(v) * g.degree(v) / vol;
  }
  if (corr < 0.0) phi_mu = -phi_mu;

  const double c1 = std::sqrt((1.0 - a) * rho / a);
  const double c2 = std::sqrt(a * rho / (1.0 - a));
  const LabelingMap label = canonical_labeling(g);
  Eigen::VectorXd dens1(g.n()), dens2(g.n());
  for (int v = 0; v < g.n(); ++v) {
    const double mu_v = g.degree(v) / vol;
    dens1(label.position[v]) = g.n() * mu_v * (1.0 + c1 * phi_mu(v));
    dens2(label.position[v]) = g.n() * mu_v * (1.0 - c2 * phi_mu(v));
  }
  return {StepMeasure::equal_cells(std::move(dens1)), StepMeasure::equal_cells(std::move(dens2))};
}

Eigen::MatrixXd rank_k_matrix(const Graph& g, const RankKSplit& split) {
  validate_split(g, split);
  const int k = static_cast<int>(split.parts.size());
  Eigen::MatrixXd m(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      double sum = 0.0;
      for (int v = 0; v < g.n(); ++v) sum += split.parts[i](v) * split.parts[j](v) / g.degree(v);
      m(i, j) = m(j, i) = sum;
    }
  }
  return m;
}

std::vector<std::pair<double, Eigen::VectorXd>> rank_k_eigs(const Graph& g, const RankKSplit& split) {
  const int k = static_cast<int>(split.parts.size());
  const Eigen::MatrixXd m = rank_k_matrix(g, split);
  Eigen::VectorXd vols(k);
  for (int j = 0; j < k; ++j) {
    vols(j) = split.parts[j].sum();
    if (vols(j) <= 0.0) throw DegeneratePart("part " + std::to_string(j) + " has zero volume");
  }
  const Eigen::VectorXd vinv_sqrt = vols.cwiseSqrt().cwiseInverse();
  const SpectralSummary reduced = symmetric_spectrum(vinv_sqrt.asDiagonal() * m * vinv_sqrt.asDiagonal());
  std::vector<std::pair<double, Eigen::VectorXd>> out;
  for (int i = 0; i < k; ++i) {
    // coefficients c = V^{1/2} psi put the reduced eigenvector back on the
    // vertex space: xi(v) = sum_j c_j d_j(v) / (vol_j sqrt(d_v))
    const Eigen::VectorXd c = vols.cwiseSqrt().cwiseProduct(reduced.phi.col(i));
    Eigen::VectorXd xi = Eigen::VectorXd::Zero(g.n());
    for (int j = 0; j < k; ++j) xi += c(j) / vols(j) * split.parts[j];
    xi = xi.cwiseQuotient(g.degrees().cwiseSqrt());
    if (xi.norm() > 0.0) xi.normalize();
    out.emplace_back(reduced.rho(i), orient_by_peak(xi));
  }
  return out;
}

Eigen::MatrixXd rank_k_approximant(const Graph& g, const RankKSplit& split) {
  validate_split(g, split);
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(g.n(), g.n());
  for (const auto& part : split.parts) {
    const double vol_j = part.sum();
    if (vol_j <= 0.0) throw DegeneratePart("part with zero volume");
    b += part * part.transpose() / vol_j;
  }
  return b;
}

double rank_k_residual(const Graph& g, const RankKSplit& split) {
  return residual_norm(g, rank_k_approximant(g, split));
}

}  // namespace graphlets
