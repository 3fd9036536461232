#include "graphlets/step.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace graphlets {

double StepMeasure::total() const {
  double out = 0.0;
  for (int c = 0; c < cells(); ++c) out += cell_mass(c);
  return out;
}

StepMeasure StepMeasure::uniform(int cells) {
  return equal_cells(Eigen::VectorXd::Ones(cells));
}

StepMeasure StepMeasure::equal_cells(Eigen::VectorXd density) {
  StepMeasure m;
  const int k = static_cast<int>(density.size());
  m.breakpoints.resize(k + 1);
  for (int i = 0; i <= k; ++i) m.breakpoints[i] = static_cast<double>(i) / k;
  m.density = std::move(density);
  return m;
}

StepMeasure StepMeasure::refined(int m) const {
  const int k = cells();
  if (m % k != 0) throw NumericalFailure("refinement " + std::to_string(m) + " not a multiple of " + std::to_string(k));
  const int r = m / k;
  Eigen::VectorXd d(m);
  for (int c = 0; c < m; ++c) d(c) = density(c / r);
  return equal_cells(std::move(d));
}

double l1_distance(const StepMeasure& a, const StepMeasure& b) {
  std::vector<double> cuts;
  cuts.reserve(a.breakpoints.size() + b.breakpoints.size());
  cuts.insert(cuts.end(), a.breakpoints.begin(), a.breakpoints.end());
  cuts.insert(cuts.end(), b.breakpoints.begin(), b.breakpoints.end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  double out = 0.0;
  std::size_t ia = 0, ib = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    while (a.breakpoints[ia + 1] < mid) ++ia;
    while (b.breakpoints[ib + 1] < mid) ++ib;
    out += std::abs(a.density(static_cast<int>(ia)) - b.density(static_cast<int>(ib))) * (cuts[i + 1] - cuts[i]);
  }
  return out;
}

StepKernel StepKernel::refined(int m) const {
  const int k = cells();
  if (m % k != 0) throw NumericalFailure("refinement " + std::to_string(m) + " not a multiple of " + std::to_string(k));
  const int r = m / k;
  StepKernel out;
  out.values.resize(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) out.values(i, j) = values(i / r, j / r);
  }
  return out;
}

StepMeasure lift_measure(const Graph& g, const LabelingMap& label) {
  const int n = g.n();
  Eigen::VectorXd density(n);
  const Eigen::VectorXd mu = g.degrees() / g.volume();
  for (int v = 0; v < n; ++v) density(label.position[v]) = n * mu(v);
  return StepMeasure::equal_cells(std::move(density));
}

StepKernel lift_kernel(const Graph& g, const LabelingMap& label) {
  const int n = g.n();
  StepKernel k;
  k.values.resize(n, n);
  const auto vertex = label.vertex_of_cell();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) k.values(i, j) = g.weight(vertex[i], vertex[j]);
  }
  return k;
}

int common_refinement_cells(int m, int n) {
  const long long l = std::lcm(static_cast<long long>(m), static_cast<long long>(n));
  if (l > kMaxRefinementCells) {
    throw RefinementTooLarge("common refinement needs " + std::to_string(l) + " cells (cap " +
                             std::to_string(kMaxRefinementCells) + ")");
  }
  return static_cast<int>(l);
}

std::pair<StepKernel, StepKernel> refine_common(const StepKernel& k1, const StepKernel& k2) {
  const int l = common_refinement_cells(k1.cells(), k2.cells());
  return {k1.refined(l), k2.refined(l)};
}

LiftedGraph lift(const Graph& g, const LabelingMap& label, int cells) {
  const int n = g.n();
  if (cells % n != 0) throw NumericalFailure("lift cells must be a multiple of n");
  LiftedGraph lg;
  lg.n = n;
  lg.cells = cells;
  lg.kernel = lift_kernel(g, label).refined(cells);
  lg.measure = lift_measure(g, label).refined(cells);
  lg.vol = g.volume();
  lg.cell_deg.resize(cells);
  lg.vertex_of_cell.resize(cells);
  const auto vertex = label.vertex_of_cell();
  const int r = cells / n;
  for (int c = 0; c < cells; ++c) {
    lg.vertex_of_cell[c] = vertex[c / r];
    lg.cell_deg(c) = g.degree(vertex[c / r]);
  }
  return lg;
}

double lifted_inner(const LiftedGraph& lg, const Eigen::VectorXd& f, const Eigen::VectorXd& g) {
  double out = 0.0;
  for (int c = 0; c < lg.cells; ++c) out += f(c) * g(c) * lg.mass(c);
  return out;
}

Eigen::VectorXd lifted_apply(const LiftedGraph& lg, const Eigen::VectorXd& f) {
  // Delta^(eta) f(x) = f(x) - (n/d(eta(x))) * int W(x,y) f(y) dy, with the
  // integral over equal cells of width 1/cells and the kernel scaled from the
  // original n-cell grid (factor n absorbed as lg.n).
  Eigen::VectorXd wf = lg.kernel.values * f / lg.cells;
  Eigen::VectorXd out(lg.cells);
  for (int c = 0; c < lg.cells; ++c) out(c) = f(c) - lg.n * wf(c) / lg.cell_deg(c);
  return out;
}

double lifted_quadratic_form(const LiftedGraph& lg, const Eigen::VectorXd& f, const Eigen::VectorXd& g) {
  return lifted_inner(lg, f, lifted_apply(lg, g));
}

Eigen::VectorXd step_project(const LiftedGraph& lg, const Eigen::VectorXd& f) {
  Eigen::VectorXd num = Eigen::VectorXd::Zero(lg.n);
  Eigen::VectorXd den = Eigen::VectorXd::Zero(lg.n);
  for (int c = 0; c < lg.cells; ++c) {
    num(lg.vertex_of_cell[c]) += f(c) * lg.mass(c);
    den(lg.vertex_of_cell[c]) += lg.mass(c);
  }
  return num.array() / den.array();
}

Eigen::VectorXd expand_to_cells(const LiftedGraph& lg, const Eigen::VectorXd& per_vertex) {
  Eigen::VectorXd out(lg.cells);
  for (int c = 0; c < lg.cells; ++c) out(c) = per_vertex(lg.vertex_of_cell[c]);
  return out;
}

}  // namespace graphlets
