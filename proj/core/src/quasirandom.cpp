#include "graphlets/quasirandom.hpp"

#include <cmath>

#include "graphlets/spectral.hpp"
#include "graphlets/subset_search.hpp"

namespace graphlets {

namespace {

std::vector<char> partition_mask(const Graph& g, const std::vector<int>& x) {
  std::vector<char> in_x(g.n(), 0);
  for (int v : x) {
    if (v < 0 || v >= g.n()) throw InvalidPartition("vertex " + std::to_string(v) + " out of range");
    in_x[v] = 1;
  }
  int count = 0;
  for (char c : in_x) count += c;
  if (count == 0 || count == g.n()) throw InvalidPartition("partition side must be nonempty and proper");
  return in_x;
}

Certificate residual_certificate(const Graph& g, const Eigen::MatrixXd& approximant, QrProperty property) {
  const Eigen::VectorXd dinv_sqrt = g.degrees().array().rsqrt();
  const Eigen::MatrixXd r = dinv_sqrt.asDiagonal() * (g.adjacency() - approximant) * dinv_sqrt.asDiagonal();
  const SpectralSummary s = symmetric_spectrum(r);
  Certificate cert;
  cert.property = property;
  cert.exact = true;
  int arg = 0;
  for (int i = 1; i < s.rho.size(); ++i) {
    if (std::abs(s.rho(i)) > std::abs(s.rho(arg))) arg = i;
  }
  cert.epsilon = std::abs(s.rho(arg));
  cert.witness_eigenvalue = s.rho(arg);
  cert.witness_vector = s.phi.col(arg);
  return cert;
}

PairSearchConfig search_config(const DiscMode& mode) {
  PairSearchConfig c;
  c.exact = mode.exact;
  c.samples = mode.samples;
  c.seed = mode.seed;
  return c;
}

}  // namespace

std::string qr_property_name(QrProperty p) {
  switch (p) {
    case QrProperty::SpectralIv: return "spectral";
    case QrProperty::DiscrepancyV: return "disc";
    case QrProperty::TraceVi: return "trace";
    case QrProperty::BipartiteIv: return "bip-spectral";
    case QrProperty::BipartiteV: return "bip-disc";
  }
  return "?";
}

Certificate qr_epsilon_spectral(const Graph& g) {
  return residual_certificate(g, rank1_approximant(g), QrProperty::SpectralIv);
}

Certificate qr_epsilon_discrepancy(const Graph& g, DiscMode mode) {
  const double vol = g.volume();
  PairObjective obj;
  obj.mats = {g.adjacency()};
  obj.vecs = {g.degrees()};
  obj.eval = [vol](const std::vector<double>& m, const std::vector<double>& vs, const std::vector<double>& vt) {
    return std::abs(m[0] - vs[0] * vt[0] / vol) / std::sqrt(vs[0] * vt[0]);
  };
  const PairSearchResult r = maximize_over_pairs(obj, g.n(), search_config(mode));
  Certificate cert;
  cert.property = QrProperty::DiscrepancyV;
  cert.epsilon = r.value;
  cert.exact = !r.lower_bound;
  cert.witness_s = r.best_s;
  cert.witness_t = r.best_t;
  return cert;
}

Certificate qr_trace_defect(const Graph& g, int k) {
  if (k < 2 || k % 2 != 0) throw InvalidArgument("trace defect needs an even k >= 2, got " + std::to_string(k));
  Certificate cert;
  cert.property = QrProperty::TraceVi;
  cert.exact = true;
  cert.trace_k = k;
  cert.trace_value = trace_power(g, k);
  cert.epsilon = std::abs(cert.trace_value - 1.0);
  return cert;
}

Eigen::MatrixXd bipartite_approximant(const Graph& g, const std::vector<int>& x, BipartiteOptions opts) {
  const std::vector<char> in_x = partition_mask(g, x);
  const double factor = opts.paper_literal ? 1.0 : 2.0;
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(g.n(), g.n());
  for (int u = 0; u < g.n(); ++u) {
    for (int v = 0; v < g.n(); ++v) {
      if (in_x[u] != in_x[v]) b(u, v) = factor * g.degree(u) * g.degree(v) / g.volume();
    }
  }
  return b;
}

Certificate bipartite_epsilon_spectral(const Graph& g, const std::vector<int>& x, BipartiteOptions opts) {
  return residual_certificate(g, bipartite_approximant(g, x, opts), QrProperty::BipartiteIv);
}

Certificate bipartite_epsilon_discrepancy(const Graph& g, const std::vector<int>& x, DiscMode mode,
                                          BipartiteOptions opts) {
  const std::vector<char> in_x = partition_mask(g, x);
  const double factor = opts.paper_literal ? 1.0 : 2.0;
  const double vol = g.volume();
  Eigen::VectorXd deg_x = Eigen::VectorXd::Zero(g.n());
  Eigen::VectorXd deg_xbar = Eigen::VectorXd::Zero(g.n());
  for (int v = 0; v < g.n(); ++v) (in_x[v] ? deg_x : deg_xbar)(v) = g.degree(v);
  PairObjective obj;
  obj.mats = {g.adjacency()};
  obj.vecs = {deg_x, deg_xbar, g.degrees()};
  obj.eval = [factor, vol](const std::vector<double>& m, const std::vector<double>& vs,
                           const std::vector<double>& vt) {
    const double expected = factor * (vs[0] * vt[1] + vs[1] * vt[0]) / vol;
    return std::abs(m[0] - expected) / std::sqrt(vs[2] * vt[2]);
  };
  const PairSearchResult r = maximize_over_pairs(obj, g.n(), search_config(mode));
  Certificate cert;
  cert.property = QrProperty::BipartiteV;
  cert.epsilon = r.value;
  cert.exact = !r.lower_bound;
  cert.witness_s = r.best_s;
  cert.witness_t = r.best_t;
  return cert;
}

}  // namespace graphlets
