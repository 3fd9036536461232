#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "graphlets/graph.hpp"

namespace graphlets {

/// Largest equal-cell grid used for lifted-kernel comparisons. Beyond this,
/// comparisons must go through the vertex-level spectral path.
inline constexpr int kMaxRefinementCells = 4096;

/// Piecewise-constant density on [0,1]. General breakpoints are supported for
/// measure arithmetic; lifts of n-vertex graphs use n equal cells.
struct StepMeasure {
  std::vector<double> breakpoints;  // 0 = x0 < ... < xk = 1
  Eigen::VectorXd density;          // one value per cell

  int cells() const { return static_cast<int>(density.size()); }
  double total() const;
  /// Mass of cell c: density * cell width.
  double cell_mass(int c) const { return density(c) * (breakpoints[c + 1] - breakpoints[c]); }

  static StepMeasure uniform(int cells);
  static StepMeasure equal_cells(Eigen::VectorXd density);
  /// Re-express on m equal cells; m must be a multiple of cells() for
  /// equal-cell measures (value-preserving block replication).
  StepMeasure refined(int m) const;
};

/// Integral of |a - b| over [0,1]; works for any two breakpoint grids.
double l1_distance(const StepMeasure& a, const StepMeasure& b);

/// Piecewise-constant symmetric kernel on [0,1]^2 over equal cells.
struct StepKernel {
  Eigen::MatrixXd values;  // cells x cells, symmetric

  int cells() const { return static_cast<int>(values.rows()); }
  StepKernel refined(int m) const;
};

/// Density n*mu(v) on the cell assigned to v by the labeling.
StepMeasure lift_measure(const Graph& g, const LabelingMap& label);

/// W(x,y) = A(u,v) on I_u x I_v.
StepKernel lift_kernel(const Graph& g, const LabelingMap& label);

/// Re-express both kernels on the lcm grid; throws RefinementTooLarge beyond
/// kMaxRefinementCells.
std::pair<StepKernel, StepKernel> refine_common(const StepKernel& k1, const StepKernel& k2);

int common_refinement_cells(int m, int n);

/// A graph lifted to a grid of L cells (L a multiple of n): everything the
/// lifted operator Delta^(eta) needs.
struct LiftedGraph {
  int n = 0;                 // vertex count
  int cells = 0;             // refinement cell count L
  StepKernel kernel;         // L x L
  StepMeasure measure;       // density per cell
  Eigen::VectorXd cell_deg;  // degree of the vertex owning each cell
  double vol = 0.0;
  std::vector<int> vertex_of_cell;

  /// mu-mass of cell c.
  double mass(int c) const { return measure.density(c) / cells; }
};

LiftedGraph lift(const Graph& g, const LabelingMap& label, int cells);

/// <f, g>_{mu,eta} for step functions on the lift's cells.
double lifted_inner(const LiftedGraph& lg, const Eigen::VectorXd& f, const Eigen::VectorXd& g);

/// Delta^(eta) applied to a step function on the cells.
Eigen::VectorXd lifted_apply(const LiftedGraph& lg, const Eigen::VectorXd& f);

/// <f, Delta^(eta) g>_{mu,eta}.
double lifted_quadratic_form(const LiftedGraph& lg, const Eigen::VectorXd& f, const Eigen::VectorXd& g);

/// Step projection onto vertex cells: f~(u) = (int_{I_u} f mu) / mu(u).
/// Returns one value per vertex (indexed by vertex id).
Eigen::VectorXd step_project(const LiftedGraph& lg, const Eigen::VectorXd& f);

/// Expand a per-vertex vector back onto the lift's cells.
Eigen::VectorXd expand_to_cells(const LiftedGraph& lg, const Eigen::VectorXd& per_vertex);

}  // namespace graphlets
