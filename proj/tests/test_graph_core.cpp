#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "graphlets/distances.hpp"
#include "graphlets/generators.hpp"
#include "graphlets/io.hpp"
#include "graphlets/spectral.hpp"
#include "graphlets/step.hpp"
#include "helpers.hpp"

using namespace graphlets;

namespace {

Graph graph_from_text(const std::string& text) {
  const std::string path = std::string(std::tmpnam(nullptr)) + ".el";
  std::ofstream(path) << text;
  Graph g = load_graph(path);
  std::remove(path.c_str());
  return g;
}

/// Unit-weight graph on 5 vertices with degree sequence (2,2,3,3,4).
Graph g5() {
  return Graph::from_edges(5, {{0, 4, 1}, {1, 4, 1}, {2, 4, 1}, {3, 4, 1}, {0, 2, 1}, {1, 3, 1}, {2, 3, 1}});
}

}  // namespace

TEST_CASE("edge list loading") {
  const Graph p3 = graph_from_text("0 1\n1 2\n");
  CHECK(p3.n() == 3);
  CHECK(p3.degree(0) == 1.0);
  CHECK(p3.degree(1) == 2.0);
  CHECK(p3.degree(2) == 1.0);

  const Graph k2 = graph_from_text("0 1 2.5\n");
  CHECK(k2.weight(0, 1) == 2.5);
  CHECK(k2.volume() == 5.0);

  // vertex 5 carries no incident edge weight
  CHECK_THROWS_WITH_AS(graph_from_text("0 1\n1 4\n4 5 0\n"), doctest::Contains("vertex 5"), IsolatedVertex);
  CHECK_THROWS_AS(graph_from_text("0 1 -2\n"), NegativeWeight);
  CHECK_THROWS_AS(graph_from_text("0 1 1\n0 1 2\n"), ConflictingWeight);
  CHECK_THROWS_AS(graph_from_text("0\n"), ParseError);
  CHECK_THROWS_AS(graph_from_text("0 1 1 7\n"), ParseError);
  CHECK_THROWS_AS(graph_from_text("0 1 abc\n"), ParseError);
  CHECK_THROWS_AS(graph_from_text("junk\n"), ParseError);

  // comments, blank lines, sparse original ids
  const Graph g = graph_from_text("# header\n10 20 1.5\n\n20 30\n");
  CHECK(g.n() == 3);
  CHECK(g.original_ids() == std::vector<long long>{10, 20, 30});
}

TEST_CASE("degree measure") {
  const auto mu5 = degree_measure(g5()).values;
  CHECK(mu5(0) == doctest::Approx(1.0 / 7).epsilon(1e-12));
  CHECK(mu5(1) == doctest::Approx(1.0 / 7).epsilon(1e-12));
  CHECK(mu5(2) == doctest::Approx(3.0 / 14).epsilon(1e-12));
  CHECK(mu5(3) == doctest::Approx(3.0 / 14).epsilon(1e-12));
  CHECK(mu5(4) == doctest::Approx(2.0 / 7).epsilon(1e-12));

  const auto mu4 = degree_measure(complete_graph(4)).values;
  for (int v = 0; v < 4; ++v) CHECK(mu4(v) == doctest::Approx(0.25));

  const auto mu3 = degree_measure(path_graph(3)).values;
  CHECK(mu3(0) == doctest::Approx(0.25));
  CHECK(mu3(1) == doctest::Approx(0.5));
  CHECK(mu3(2) == doctest::Approx(0.25));
}

TEST_CASE("lifted measures and kernels") {
  const Graph p3 = path_graph(3);
  const StepMeasure m = lift_measure(p3, LabelingMap::identity(3));
  CHECK(m.density(0) == doctest::Approx(0.75));
  CHECK(m.density(1) == doctest::Approx(1.5));
  CHECK(m.density(2) == doctest::Approx(0.75));
  CHECK(m.total() == doctest::Approx(1.0).epsilon(1e-12));

  const StepMeasure mc = lift_measure(cycle_graph(5), canonical_labeling(cycle_graph(5)));
  for (int c = 0; c < 5; ++c) CHECK(mc.density(c) == doctest::Approx(1.0));

  const Graph k2 = complete_graph(2);
  const StepKernel kk2 = lift_kernel(k2, LabelingMap::identity(2));
  CHECK(kk2.values(0, 0) == 0.0);
  CHECK(kk2.values(0, 1) == 1.0);
  CHECK(kk2.values(1, 0) == 1.0);

  LabelingMap swapped;
  swapped.position = {1, 0};
  const StepMeasure ms = lift_measure(k2, swapped);
  CHECK(ms.density(0) == lift_measure(k2, LabelingMap::identity(2)).density(0));

  const Graph wk2 = Graph::from_edges(2, {{0, 1, 2.5}});
  CHECK(lift_kernel(wk2, LabelingMap::identity(2)).values(0, 1) == 2.5);
}

TEST_CASE("common refinement") {
  const StepKernel k2 = lift_kernel(complete_graph(2), LabelingMap::identity(2));
  const StepKernel k3 = lift_kernel(complete_graph(3), LabelingMap::identity(3));
  auto [r2, r3] = refine_common(k2, k3);
  CHECK(r2.cells() == 6);
  CHECK(r3.cells() == 6);
  // K2's kernel is constant on 3x3 blocks
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(r2.values(i, j) == 0.0);
      CHECK(r2.values(i, j + 3) == 1.0);
    }
  }
  auto [s3, t3] = refine_common(k3, k3);
  CHECK(s3.values == k3.values);

  CHECK_THROWS_AS(common_refinement_cells(100, 101), RefinementTooLarge);
}

TEST_CASE("step projection") {
  const Graph p3 = path_graph(3);
  const LiftedGraph lg = lift(p3, LabelingMap::identity(3), 6);

  // already constant per vertex cell: projection is the identity
  Eigen::VectorXd f(6);
  f << 2, 2, -1, -1, 0.5, 0.5;
  const Eigen::VectorXd ftilde = step_project(lg, f);
  CHECK(ftilde(0) == doctest::Approx(2.0));
  CHECK(ftilde(1) == doctest::Approx(-1.0));
  CHECK(ftilde(2) == doctest::Approx(0.5));
  CHECK((expand_to_cells(lg, ftilde) - f).norm() == doctest::Approx(0.0).epsilon(1e-14));

  CHECK((step_project(lg, Eigen::VectorXd::Ones(6)) - Eigen::VectorXd::Ones(3)).norm() ==
        doctest::Approx(0.0).epsilon(1e-14));

  // indicator of the left half of the middle vertex's interval
  Eigen::VectorXd half = Eigen::VectorXd::Zero(6);
  half(2) = 1.0;
  CHECK(step_project(lg, half)(1) == doctest::Approx(0.5));

  // mu-norm contraction and idempotence on random functions
  graphlets::rng::Stream rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::VectorXd r(6);
    for (int c = 0; c < 6; ++c) r(c) = rng.next_normal();
    const Eigen::VectorXd rt = step_project(lg, r);
    const Eigen::VectorXd rt_cells = expand_to_cells(lg, rt);
    CHECK(lifted_inner(lg, rt_cells, rt_cells) <= lifted_inner(lg, r, r) + 1e-12);
    CHECK((step_project(lg, rt_cells) - rt).norm() == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("incidence") {
  const Graph k3 = complete_graph(3);
  CHECK(incidence(k3, {0}, {1, 2}) == doctest::Approx(2.0));
  CHECK(incidence(k3, {}, {0, 1, 2}) == 0.0);
  const Graph k4 = complete_graph(4);
  CHECK(incidence(k4, test_helpers::all_vertices(k4), test_helpers::all_vertices(k4)) == doctest::Approx(12.0));
}

TEST_CASE("incidence matches the operator form") {
  graphlets::rng::Stream rng(5);
  // exhaustive over subset pairs for small graphs
  for (int n : {3, 4, 5}) {
    const Graph g = test_helpers::random_weighted_graph(n, rng);
    for (int sm = 0; sm < (1 << n); ++sm) {
      for (int tm = 0; tm < (1 << n); ++tm) {
        Eigen::VectorXd chi_s = Eigen::VectorXd::Zero(n), chi_t = Eigen::VectorXd::Zero(n);
        std::vector<int> s, t;
        for (int v = 0; v < n; ++v) {
          if (sm & (1 << v)) {
            chi_s(v) = 1;
            s.push_back(v);
          }
          if (tm & (1 << v)) {
            chi_t(v) = 1;
            t.push_back(v);
          }
        }
        const double lhs = incidence(g, s, t);
        const double rhs = g.volume() * (mu_inner(g, chi_s, chi_t) - quadratic_form(g, chi_s, chi_t));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
        CHECK(rhs >= -1e-10);  // positivity of <chi_S, (I - Delta) chi_T>
      }
    }
  }
  // random subsets on a larger graph
  const Graph g = test_helpers::random_weighted_graph(20, rng);
  for (int trial = 0; trial < 50; ++trial) {
    Eigen::VectorXd chi_s = Eigen::VectorXd::Zero(20), chi_t = Eigen::VectorXd::Zero(20);
    std::vector<int> s, t;
    for (int v = 0; v < 20; ++v) {
      if (rng.next_u01() < 0.5) {
        chi_s(v) = 1;
        s.push_back(v);
      }
      if (rng.next_u01() < 0.5) {
        chi_t(v) = 1;
        t.push_back(v);
      }
    }
    const double rhs = g.volume() * (mu_inner(g, chi_s, chi_t) - quadratic_form(g, chi_s, chi_t));
    CHECK(incidence(g, s, t) == doctest::Approx(rhs).epsilon(1e-10));
  }
}

TEST_CASE("quadratic form splits across the step projection") {
  graphlets::rng::Stream rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng.next_below(6));
    const int r = 1 + static_cast<int>(rng.next_below(3));
    const Graph g = test_helpers::random_weighted_graph(n, rng);
    const LiftedGraph lg = lift(g, canonical_labeling(g), n * r);
    Eigen::VectorXd f(n * r);
    for (int c = 0; c < n * r; ++c) f(c) = rng.next_normal();
    const Eigen::VectorXd ft = step_project(lg, f);
    const Eigen::VectorXd diff = f - expand_to_cells(lg, ft);
    const double lhs = lifted_quadratic_form(lg, f, f);
    const double rhs = quadratic_form(g, ft, ft) + lifted_inner(lg, diff, diff);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
}

TEST_CASE("canonical labeling sorts by degree") {
  const Graph g = g5();
  const LabelingMap label = canonical_labeling(g);
  const auto order = label.vertex_of_cell();
  for (std::size_t c = 0; c + 1 < order.size(); ++c) {
    CHECK(g.degree(order[c]) <= g.degree(order[c + 1]));
  }
  // ties broken by vertex id
  CHECK(order[0] == 0);
  CHECK(order[1] == 1);
}

TEST_CASE("lift measure integrates to one for random graphs and labelings") {
  graphlets::rng::Stream rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(10));
    const Graph g = test_helpers::random_weighted_graph(n, rng);
    CHECK(lift_measure(g, canonical_labeling(g)).total() == doctest::Approx(1.0).epsilon(1e-12));
  }
}
