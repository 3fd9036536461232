#include "graphlets/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace graphlets {

namespace {

constexpr int kDenseLimit = 4096;

/// Descending sort with deterministic eigenvector orientation: the first
/// coordinate with |x| > 1e-12 is made positive.
SpectralSummary order_and_orient(Eigen::VectorXd values, Eigen::MatrixXd vectors) {
  const int n = static_cast<int>(values.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return values(a) > values(b); });
  SpectralSummary s;
  s.rho.resize(n);
  s.phi.resize(n, n);
  for (int i = 0; i < n; ++i) {
    s.rho(i) = values(idx[i]);
    Eigen::VectorXd col = vectors.col(idx[i]);
    for (int j = 0; j < n; ++j) {
      if (std::abs(col(j)) > 1e-12) {
        if (col(j) < 0.0) col = -col;
        break;
      }
    }
    s.phi.col(i) = col;
  }
  return s;
}

Eigen::MatrixXd normalized_adjacency(const Graph& g) {
  const Eigen::VectorXd dinv_sqrt = g.degrees().array().rsqrt();
  return dinv_sqrt.asDiagonal() * g.adjacency() * dinv_sqrt.asDiagonal();
}

/// Spectral norm of a symmetric matrix by power iteration; only used past the
/// dense cutoff.
double power_norm(const Eigen::MatrixXd& r) {
  const int n = static_cast<int>(r.rows());
  Eigen::VectorXd x = Eigen::VectorXd::Ones(n).normalized();
  for (int i = 0; i < n; ++i) x(i) += 1e-3 * std::sin(i + 1.0);
  x.normalize();
  double norm = 0.0;
  for (int it = 0; it < 1000; ++it) {
    Eigen::VectorXd y = r * x;
    const double next = y.norm();
    if (next == 0.0) return 0.0;
    x = y / next;
    if (it > 2 && std::abs(next - norm) <= 1e-12 * std::max(1.0, next)) return next;
    norm = next;
  }
  return norm;
}

}  // namespace

int SpectralSummary::top_multiplicity(double tol) const {
  int count = 0;
  for (int i = 0; i < rho.size(); ++i) {
    if (std::abs(rho(i) - 1.0) <= tol) ++count;
  }
  return count;
}

SpectralSummary symmetric_spectrum(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  if (es.info() != Eigen::Success) {
    throw NumericalFailure("symmetric eigensolver did not converge on a " + std::to_string(m.rows()) +
                           "-dimensional matrix");
  }
  SpectralSummary s = order_and_orient(es.eigenvalues(), es.eigenvectors());
  s.residual = (m - s.phi * s.rho.asDiagonal() * s.phi.transpose()).norm();
  return s;
}

SpectralSummary spectrum(const Graph& g) {
  SpectralSummary s = symmetric_spectrum(normalized_adjacency(g));
  const Eigen::VectorXd dinv_sqrt = g.degrees().array().rsqrt();
  s.combinatorial = dinv_sqrt.asDiagonal() * s.phi;
  return s;
}

double trace_power(const Graph& g, int k) {
  if (k < 1) throw NumericalFailure("trace power needs k >= 1");
  const SpectralSummary s = spectrum(g);
  double out = 0.0;
  for (int i = 0; i < s.rho.size(); ++i) out += std::pow(s.rho(i), k);
  return out;
}

double residual_norm(const Graph& g, const Eigen::MatrixXd& approximant) {
  if (approximant.rows() != g.n() || approximant.cols() != g.n()) {
    throw VertexCountMismatch("approximant is " + std::to_string(approximant.rows()) + "x" +
                              std::to_string(approximant.cols()) + " for an n=" + std::to_string(g.n()) + " graph");
  }
  const Eigen::VectorXd dinv_sqrt = g.degrees().array().rsqrt();
  const Eigen::MatrixXd r =
      dinv_sqrt.asDiagonal() * (g.adjacency() - approximant) * dinv_sqrt.asDiagonal();
  if (g.n() > kDenseLimit) return power_norm(r);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(r, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalFailure("residual eigensolver did not converge");
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double quadratic_form(const Graph& g, const Eigen::VectorXd& f, const Eigen::VectorXd& h) {
  double out = 0.0;
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      out += (f(u) - f(v)) * (h(u) - h(v)) * g.weight(u, v);
    }
  }
  return out / g.volume();
}

double quadratic_form_matrix(const Graph& g, const Eigen::VectorXd& f, const Eigen::VectorXd& h) {
  Eigen::VectorXd delta_h = h - g.degrees().cwiseInverse().asDiagonal() * (g.adjacency() * h);
  return mu_inner(g, f, delta_h);
}

Eigen::MatrixXd rank1_approximant(const Graph& g) {
  return g.degrees() * g.degrees().transpose() / g.volume();
}

}  // namespace graphlets
