#include <doctest.h>

#include "graphlets/generators.hpp"
#include "graphlets/spectral.hpp"
#include "helpers.hpp"

using namespace graphlets;

TEST_CASE("closed-form spectra") {
  const SpectralSummary k2 = spectrum(complete_graph(2));
  CHECK(k2.rho(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(k2.rho(1) == doctest::Approx(-1.0).epsilon(1e-12));

  const SpectralSummary k4 = spectrum(complete_graph(4));
  CHECK(k4.rho(0) == doctest::Approx(1.0).epsilon(1e-10));
  for (int i = 1; i < 4; ++i) CHECK(k4.rho(i) == doctest::Approx(-1.0 / 3).epsilon(1e-10));

  const SpectralSummary c4 = spectrum(cycle_graph(4));
  CHECK(c4.rho(0) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(c4.rho(1) == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(c4.rho(2) == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(c4.rho(3) == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("spectrum invariants on random graphs") {
  graphlets::rng::Stream rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(12));
    const Graph g = test_helpers::random_weighted_graph(n, rng);
    const SpectralSummary s = spectrum(g);
    CHECK(s.residual <= 1e-10 * n);
    CHECK(s.rho.cwiseAbs().maxCoeff() <= 1.0 + 1e-10);
    CHECK(s.top_multiplicity() == 1);  // connected by construction
    // top eigenfunction proportional to D^{1/2} 1
    const Eigen::VectorXd expected = g.degrees().cwiseSqrt().normalized();
    CHECK((s.phi.col(0) - expected).norm() == doctest::Approx(0.0).epsilon(1e-8));
    // eigenpair residuals
    const Eigen::VectorXd dinv_sqrt = g.degrees().array().rsqrt();
    const Eigen::MatrixXd m = dinv_sqrt.asDiagonal() * g.adjacency() * dinv_sqrt.asDiagonal();
    for (int i = 0; i < n; ++i) {
      CHECK((m * s.phi.col(i) - s.rho(i) * s.phi.col(i)).norm() <= 1e-9);
    }
  }
  // disconnected: top multiplicity equals the component count
  const Graph m3 = matching_graph(3);
  CHECK(spectrum(m3).top_multiplicity() == 3);
  CHECK(m3.component_count() == 3);
}

TEST_CASE("trace powers") {
  CHECK(trace_power(complete_graph(4), 4) == doctest::Approx(28.0 / 27).epsilon(1e-12));
  CHECK(trace_power(complete_graph(2), 2) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(trace_power(complete_graph(2), 6) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(trace_power(complete_bipartite(2, 3), 4) == doctest::Approx(2.0).epsilon(1e-10));
  // trace of M itself vanishes without loops
  graphlets::rng::Stream rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    const Graph g = test_helpers::random_weighted_graph(6, rng);
    CHECK(trace_power(g, 1) == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("residual norms") {
  const Graph k5 = complete_graph(5);
  CHECK(residual_norm(k5, k5.adjacency()) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(residual_norm(k5, rank1_approximant(k5)) == doctest::Approx(0.25).epsilon(1e-10));
  const Graph m2 = matching_graph(2);
  CHECK(residual_norm(m2, rank1_approximant(m2)) >= 1.0 - 1e-10);
  CHECK_THROWS_AS(residual_norm(k5, Eigen::MatrixXd::Zero(3, 3)), VertexCountMismatch);
}

TEST_CASE("quadratic forms") {
  const Graph k2 = complete_graph(2);
  Eigen::VectorXd chi(2);
  chi << 1, 0;
  CHECK(quadratic_form(k2, chi, chi) == doctest::Approx(0.5).epsilon(1e-12));

  graphlets::rng::Stream rng(43);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(8));
    const Graph g = test_helpers::random_weighted_graph(n, rng);
    Eigen::VectorXd f(n), h(n);
    for (int v = 0; v < n; ++v) {
      f(v) = rng.next_normal();
      h(v) = rng.next_normal();
    }
    // constant functions are in the kernel of Delta
    CHECK(quadratic_form(g, f, Eigen::VectorXd::Ones(n)) == doctest::Approx(0.0).epsilon(1e-12));
    // edge-sum form equals matrix form, and the form is symmetric
    CHECK(quadratic_form(g, f, h) == doctest::Approx(quadratic_form_matrix(g, f, h)).epsilon(1e-10));
    CHECK(quadratic_form(g, f, h) == doctest::Approx(quadratic_form(g, h, f)).epsilon(1e-10));
    // Rayleigh identity on a mu-normalized eigenfunction
    const SpectralSummary s = spectrum(g);
    Eigen::VectorXd phi = s.combinatorial.col(1);
    phi /= mu_norm(g, phi);
    CHECK(quadratic_form(g, phi, phi) == doctest::Approx(1.0 - s.rho(1)).epsilon(1e-8));
  }
}
