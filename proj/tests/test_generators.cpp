#include <doctest.h>

#include <cmath>

#include "graphlets/generators.hpp"
#include "graphlets/spectral.hpp"
#include "graphlets/step.hpp"
#include "helpers.hpp"

using namespace graphlets;

TEST_CASE("named families") {
  CHECK(complete_graph(5).volume() == doctest::Approx(20.0));
  CHECK(complete_bipartite(2, 3).degree(0) == 3.0);
  CHECK(complete_bipartite(2, 3).degree(2) == 2.0);
  CHECK(path_graph(4).degree(1) == 2.0);
  CHECK(cycle_graph(5).volume() == doctest::Approx(10.0));
  CHECK(matching_graph(3).n() == 6);
  CHECK_THROWS_AS(complete_graph(1), SizeTooSmall);
  CHECK_THROWS_AS(path_graph(1), SizeTooSmall);
  CHECK_THROWS_AS(cycle_graph(2), SizeTooSmall);
  CHECK_THROWS_AS(complete_bipartite(0, 3), SizeTooSmall);
  CHECK_THROWS_AS(matching_graph(0), SizeTooSmall);
}

TEST_CASE("random draws are deterministic in the seed") {
  const Eigen::VectorXd w = Eigen::VectorXd::Constant(40, 6.0);
  const Graph a = chung_lu(w, 12345);
  const Graph b = chung_lu(w, 12345);
  CHECK(a.adjacency() == b.adjacency());
  CHECK(chung_lu(w, 12346).adjacency() != a.adjacency());

  const std::vector<Eigen::VectorXd> lists = {Eigen::VectorXd::Constant(30, 5.0), Eigen::VectorXd::Constant(30, 3.0)};
  const UnionSample u1 = union_quasirandom(lists, 7);
  const UnionSample u2 = union_quasirandom(lists, 7);
  CHECK(u1.graph.adjacency() == u2.graph.adjacency());

  const Eigen::VectorXd side = Eigen::VectorXd::Constant(20, 4.0);
  CHECK(bipartite_quasirandom(side, side, 3).adjacency() == bipartite_quasirandom(side, side, 3).adjacency());
}

TEST_CASE("chung-lu edge model") {
  // probabilities above one are refused
  Eigen::VectorXd heavy(2);
  heavy << 10.0, 10.0;
  CHECK_THROWS_AS(chung_lu(heavy, 0), ProbabilityOverflow);

  // unit edge weights, no loops, no isolated vertices
  const Eigen::VectorXd w = Eigen::VectorXd::Constant(32, 6.0);
  const Graph g = chung_lu(w, 4);
  for (int u = 0; u < g.n(); ++u) {
    CHECK(g.weight(u, u) == 0.0);
    CHECK(g.degree(u) > 0.0);
    for (int v = 0; v < g.n(); ++v) CHECK((g.weight(u, v) == 0.0 || g.weight(u, v) == 1.0));
  }

  // mean degree across seeds matches w (n-1)/n within 4 standard errors
  const int n = 64, trials = 100;
  const Eigen::VectorXd w8 = Eigen::VectorXd::Constant(n, 8.0);
  double sum = 0.0, sumsq = 0.0;
  for (int s = 0; s < trials; ++s) {
    const double mean_deg = chung_lu(w8, 1000 + s).volume() / n;
    sum += mean_deg;
    sumsq += mean_deg * mean_deg;
  }
  const double mean = sum / trials;
  const double se = std::sqrt((sumsq / trials - mean * mean) / trials);
  const double expected = 8.0 * (n - 1) / n;
  CHECK(std::abs(mean - expected) <= 4.0 * se);
}

TEST_CASE("union sample decomposes into its parts") {
  const std::vector<Eigen::VectorXd> lists = {Eigen::VectorXd::Constant(50, 10.0), Eigen::VectorXd::Constant(50, 4.0)};
  const UnionSample u = union_quasirandom(lists, 21);
  REQUIRE(u.parts.size() == 2);
  CHECK((u.parts[0].adjacency() + u.parts[1].adjacency() - u.graph.adjacency()).norm() == 0.0);
  REQUIRE(u.split.parts.size() == 2);
  for (int j = 0; j < 2; ++j) {
    CHECK((u.split.parts[j] - u.parts[j].degrees()).norm() == 0.0);
  }
  // the ground-truth split is a valid input for the rank-k machinery
  CHECK(rank_k_matrix(u.graph, u.split).rows() == 2);
}

TEST_CASE("bipartite generator") {
  // weights equal to the opposite side size force every cross probability to one
  const Graph k33 = bipartite_quasirandom(Eigen::VectorXd::Constant(3, 3.0), Eigen::VectorXd::Constant(3, 3.0), 5);
  CHECK((k33.adjacency() - complete_bipartite(3, 3).adjacency()).norm() == 0.0);

  // no within-side edges
  const Graph g = bipartite_quasirandom(Eigen::VectorXd::Constant(10, 5.0), Eigen::VectorXd::Constant(15, 4.0), 11);
  CHECK(g.n() == 25);
  for (int u = 0; u < 10; ++u) {
    for (int v = 0; v < 10; ++v) CHECK(g.weight(u, v) == 0.0);
  }
  for (int u = 10; u < 25; ++u) {
    for (int v = 10; v < 25; ++v) CHECK(g.weight(u, v) == 0.0);
  }
}

TEST_CASE("blow-up") {
  const Graph k2 = complete_graph(2);
  CHECK((blowup(k2, 2).adjacency() - complete_bipartite(2, 2).adjacency()).norm() == 0.0);

  graphlets::rng::Stream rng(113);
  const Graph g = test_helpers::random_weighted_graph(6, rng);
  CHECK((blowup(g, 1).adjacency() - g.adjacency()).norm() == 0.0);

  const int k = 3;
  const Graph b = blowup(g, k);
  CHECK(b.n() == 6 * k);
  for (int v = 0; v < 6; ++v) {
    for (int j = 0; j < k; ++j) CHECK(b.degree(v * k + j) == doctest::Approx(k * g.degree(v)).epsilon(1e-12));
  }
  // twin classes have no internal edges
  for (int v = 0; v < 6; ++v) {
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) CHECK(b.weight(v * k + i, v * k + j) == 0.0);
    }
  }
  // the degree-sorted lifted measure is unchanged: each vertex cell splits
  // into k equal twin cells of the same density
  const Eigen::VectorXd dg = lift_measure(g, canonical_labeling(g)).density;
  const Eigen::VectorXd db = lift_measure(b, canonical_labeling(b)).density;
  for (int c = 0; c < 6; ++c) {
    for (int j = 0; j < k; ++j) CHECK(db(c * k + j) == doctest::Approx(dg(c)).epsilon(1e-10));
  }
}

TEST_CASE("dense universal basis") {
  const Graph k2 = complete_graph(2);
  const int m = 2;
  const Eigen::MatrixXd basis = dense_universal_basis(k2, m);
  REQUIRE(basis.rows() == 4);
  REQUIRE(basis.cols() == 4);

  // primary columns are eigenvectors of the blown-up walk matrix (K_{2,2})
  const Graph b = blowup(k2, m);
  const Eigen::VectorXd dinv_sqrt = b.degrees().array().rsqrt();
  const Eigen::MatrixXd mw = dinv_sqrt.asDiagonal() * b.adjacency() * dinv_sqrt.asDiagonal();
  const Eigen::VectorXd dsqrt = b.degrees().cwiseSqrt();
  for (int c = 0; c < 2; ++c) {
    const Eigen::VectorXd f = dsqrt.cwiseProduct(basis.col(c));  // combinatorial -> symmetric convention
    const double rho = c == 0 ? 1.0 : -1.0;
    CHECK((mw * f - rho * f).norm() <= 1e-10 * f.norm());
  }

  // complementary columns are orthogonal to every primary column
  for (int c = 2; c < 4; ++c) {
    for (int p = 0; p < 2; ++p) CHECK(std::abs(basis.col(c).dot(basis.col(p))) <= 1e-12);
  }

  // the basis has full rank
  Eigen::FullPivLU<Eigen::MatrixXd> lu(basis);
  CHECK(lu.rank() == 4);

  // m = 1: primary columns only
  CHECK(dense_universal_basis(k2, 1).cols() == 2);

  // larger case keeps full rank and the orthogonality split
  graphlets::rng::Stream rng(127);
  const Graph h = test_helpers::random_weighted_graph(5, rng);
  const Eigen::MatrixXd big = dense_universal_basis(h, 4);
  REQUIRE(big.cols() == 20);
  Eigen::FullPivLU<Eigen::MatrixXd> lu2(big);
  CHECK(lu2.rank() == 20);
  for (int c = 5; c < 20; ++c) {
    for (int p = 0; p < 5; ++p) CHECK(std::abs(big.col(c).dot(big.col(p))) <= 1e-10);
  }
}
