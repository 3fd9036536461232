#include "graphlets/distances.hpp"

#include <cmath>

#include "graphlets/spectral.hpp"

namespace graphlets {

namespace {

/// Kernel of Delta_a - Delta_b on the common refinement, applied as (T f)/L:
/// T(c,c') = n_b K_b(c,c')/d_b(c) - n_a K_a(c,c')/d_a(c).
Eigen::MatrixXd difference_kernel(const LiftedGraph& a, const LiftedGraph& b) {
  const int l = a.cells;
  Eigen::MatrixXd t(l, l);
  for (int c = 0; c < l; ++c) {
    t.row(c) = b.n * b.kernel.values.row(c) / b.cell_deg(c) - a.n * a.kernel.values.row(c) / a.cell_deg(c);
  }
  return t;
}

struct CommonLift {
  LiftedGraph a;
  LiftedGraph b;
  int cells;
};

CommonLift lift_pair(const Graph& g1, const Graph& g2) {
  const int l = common_refinement_cells(g1.n(), g2.n());
  CommonLift out;
  out.cells = l;
  out.a = lift(g1, canonical_labeling(g1), l);
  out.b = lift(g2, canonical_labeling(g2), l);
  return out;
}

PairSearchConfig search_config(const DiscMode& mode) {
  PairSearchConfig c;
  c.exact = mode.exact;
  c.samples = mode.samples;
  c.seed = mode.seed;
  return c;
}

DiscReport run_search(const PairObjective& obj, int ground, const DiscMode& mode) {
  const PairSearchResult r = maximize_over_pairs(obj, ground, search_config(mode));
  DiscReport out;
  out.value = r.value;
  out.lower_bound = r.lower_bound;
  out.witness_s = r.best_s;
  out.witness_t = r.best_t;
  return out;
}

}  // namespace

double degree_distribution_distance(const Graph& g1, const Graph& g2) {
  return l1_distance(lift_measure(g1, canonical_labeling(g1)), lift_measure(g2, canonical_labeling(g2)));
}

SpectralDistanceReport spectral_distance(const Graph& g1, const Graph& g2) {
  const CommonLift cl = lift_pair(g1, g2);
  const int l = cl.cells;
  SpectralDistanceReport report;
  report.shared_mu = true;
  for (int c = 0; c < l; ++c) {
    if (std::abs(cl.a.measure.density(c) - cl.b.measure.density(c)) > 1e-12) {
      report.shared_mu = false;
      break;
    }
  }
  report.degree_gap = l1_distance(cl.a.measure, cl.b.measure);

  Eigen::VectorXd mass(l);
  for (int c = 0; c < l; ++c) {
    mass(c) = report.shared_mu ? cl.a.mass(c) : 0.5 * (cl.a.mass(c) + cl.b.mass(c));
  }
  const Eigen::MatrixXd t = difference_kernel(cl.a, cl.b);
  const Eigen::VectorXd sqrt_mass = mass.cwiseSqrt();
  const Eigen::MatrixXd conj =
      sqrt_mass.asDiagonal() * (t / l) * sqrt_mass.cwiseInverse().asDiagonal();
  if (report.shared_mu) {
    // conj is symmetric under a shared measure; the norm is exact there.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (conj + conj.transpose()), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericalFailure("difference-form eigensolver did not converge");
    report.value = es.eigenvalues().cwiseAbs().maxCoeff();
  } else {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(conj);
    report.value = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  }
  return report;
}

DiscReport disc_distance(const Graph& g1, const Graph& g2, DiscMode mode) {
  const CommonLift cl = lift_pair(g1, g2);
  const int l = cl.cells;
  const double scale1 = static_cast<double>(cl.a.n) * cl.a.n / (static_cast<double>(l) * l);
  const double scale2 = static_cast<double>(cl.b.n) * cl.b.n / (static_cast<double>(l) * l);
  const double dscale1 = static_cast<double>(cl.a.n) / l;
  const double dscale2 = static_cast<double>(cl.b.n) / l;
  PairObjective obj;
  obj.mats = {cl.a.kernel.values, cl.b.kernel.values};
  obj.vecs = {cl.a.cell_deg, cl.b.cell_deg};
  obj.eval = [=](const std::vector<double>& m, const std::vector<double>& vs, const std::vector<double>& vt) {
    const double e1 = scale1 * m[0], e2 = scale2 * m[1];
    const double v1 = dscale1 * dscale1 * vs[0] * vt[0];
    const double v2 = dscale2 * dscale2 * vs[1] * vt[1];
    return std::abs(e1 / std::sqrt(v1) - e2 / std::sqrt(v2));
  };
  return run_search(obj, l, mode);
}

DiscReport disc_mu(const Graph& g1, const Graph& g2, const StepMeasure& mu, DiscMode mode) {
  const CommonLift cl = lift_pair(g1, g2);
  const int l = cl.cells;
  if (l % mu.cells() != 0) {
    throw VertexCountMismatch("measure on " + std::to_string(mu.cells()) + " cells does not refine to " +
                              std::to_string(l));
  }
  const StepMeasure mu_l = mu.refined(l);
  Eigen::VectorXd mass(l);
  for (int c = 0; c < l; ++c) mass(c) = mu_l.density(c) / l;
  const Eigen::MatrixXd t = difference_kernel(cl.b, cl.a);  // Delta2 - Delta1; sign drops in the abs
  PairObjective obj;
  obj.mats = {mass.asDiagonal() * (t / l)};
  obj.vecs = {mass};
  obj.eval = [](const std::vector<double>& m, const std::vector<double>& vs, const std::vector<double>& vt) {
    return std::abs(m[0]) / std::sqrt(vs[0] * vt[0]);
  };
  return run_search(obj, l, mode);
}

DiscReport cut_distance(const Graph& g1, const Graph& g2, DiscMode mode) {
  if (g1.n() != g2.n()) {
    throw VertexCountMismatch("cut distance needs a shared vertex set (" + std::to_string(g1.n()) + " vs " +
                              std::to_string(g2.n()) + ")");
  }
  const double inv_n2 = 1.0 / (static_cast<double>(g1.n()) * g1.n());
  PairObjective obj;
  obj.mats = {g1.adjacency() - g2.adjacency()};
  obj.eval = [inv_n2](const std::vector<double>& m, const std::vector<double>&, const std::vector<double>&) {
    return std::abs(m[0]) * inv_n2;
  };
  return run_search(obj, g1.n(), mode);
}

Eigen::VectorXd quantize_four_fifths(const Eigen::VectorXd& f, const StepMeasure&) {
  const double log_ratio = std::log(0.8);
  Eigen::VectorXd h(f.size());
  for (int j = 0; j < f.size(); ++j) {
    const double a = std::abs(f(j));
    if (a == 0.0) {
      h(j) = 0.0;
      continue;
    }
    long long k = static_cast<long long>(std::ceil(std::log(a) / log_ratio - 1e-12));
    double p = std::pow(0.8, static_cast<double>(k));
    while (p > a * (1.0 + 1e-12)) p = std::pow(0.8, static_cast<double>(++k));
    h(j) = f(j) < 0.0 ? -p : p;
  }
  return h;
}

EquivalenceReport equivalence_check(const Graph& g1, const Graph& g2, DiscMode mode) {
  EquivalenceReport rep;
  const DiscReport d = disc_distance(g1, g2, mode);
  rep.eps_disc = d.value;
  rep.disc_lower_bound = d.lower_bound;
  const SpectralDistanceReport s = spectral_distance(g1, g2);
  rep.eps_spec = s.value;
  rep.degree_gap = s.degree_gap;
  rep.forward_ok = rep.eps_disc <= rep.eps_spec + 4.0 * rep.degree_gap + 1e-9;
  rep.reverse_applicable = rep.eps_disc > 0.0 && rep.eps_disc < 0.02;
  rep.reverse_ok =
      !rep.reverse_applicable || rep.eps_spec <= 20.0 * rep.eps_disc * std::log(1.0 / rep.eps_disc) + 1e-9;
  return rep;
}

}  // namespace graphlets
