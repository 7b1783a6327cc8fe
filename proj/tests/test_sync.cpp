#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>

#include "kirchhoff/er_model.hpp"
#include "kirchhoff/graph.hpp"
#include "kirchhoff/spectral.hpp"
#include "kirchhoff/sync.hpp"
#include "oracles.hpp"

using namespace kirchhoff;

TEST_CASE("sample_sync_problem validates inputs and is deterministic") {
  CHECK_THROWS_AS(sample_sync_problem(Graph(3), 1, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(sample_sync_problem(Graph::path(3), 0, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(sample_sync_problem(Graph::path(3), 1, -1.0, 0), std::invalid_argument);

  const Graph g = Graph::path(5);
  const auto a = sample_sync_problem(g, 2, 0.3, 77);
  const auto b = sample_sync_problem(g, 2, 0.3, 77);
  CHECK(a.truth == b.truth);
  CHECK(a.measurements == b.measurements);
  CHECK_FALSE(sample_sync_problem(g, 2, 0.3, 78).measurements == a.measurements);
}

TEST_CASE("truth is centered and noiseless measurements are exact differences") {
  const Graph g = Graph::path(4);
  const auto problem = sample_sync_problem(g, 3, 0.0, 5);
  CHECK(problem.truth.colwise().sum().cwiseAbs().maxCoeff() <= 1e-12);
  for (std::size_t k = 0; k < problem.edges.size(); ++k) {
    const auto [i, j] = problem.edges[k];
    const Eigen::RowVectorXd diff = problem.truth.row(i) - problem.truth.row(j);
    CHECK((problem.measurements.row(static_cast<int>(k)) - diff).cwiseAbs().maxCoeff() <=
          1e-14);
  }
}

TEST_CASE("per-axis noise variance is near sigma^2 over ~1e4 edges") {
  // Complete graph on 142 nodes has 10011 edges.
  const Graph g = Graph::complete(142);
  const auto problem = sample_sync_problem(g, 1, 1.0, 3);
  double ss = 0.0;
  for (std::size_t k = 0; k < problem.edges.size(); ++k) {
    const auto [i, j] = problem.edges[k];
    const double noise =
        problem.measurements(static_cast<int>(k), 0) - (problem.truth(i, 0) - problem.truth(j, 0));
    ss += noise * noise;
  }
  const double var = ss / static_cast<double>(problem.edges.size());
  CHECK(var >= 0.94);
  CHECK(var <= 1.06);
}

TEST_CASE("mle recovers the truth exactly without noise") {
  std::uint64_t seed = 15;
  const Graph g = oracle::random_connected_graph(12, 0.4, seed);
  const auto problem = sample_sync_problem(g, 2, 0.0, 9);
  const auto est = mle_estimate(problem);
  CHECK((est.estimates - problem.truth).cwiseAbs().maxCoeff() <= 1e-9);
  CHECK(est.residual_sq <= 1e-18 * 12);
  CHECK(est.estimates.colwise().sum().cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("two-node problem solves by hand") {
  // truth (a, -a); measurement h = 2a + nu; estimate is (h/2, -h/2), so the
  // residual is nu^2/2.
  const auto problem = sample_sync_problem(Graph::complete(2), 1, 0.7, 123);
  const double a = problem.truth(0, 0);
  CHECK(problem.truth(1, 0) == doctest::Approx(-a).epsilon(1e-14));
  const double h = problem.measurements(0, 0);
  const double nu = h - 2.0 * a;

  const auto est = mle_estimate(problem);
  CHECK(est.estimates(0, 0) == doctest::Approx(h / 2.0).epsilon(1e-12));
  CHECK(est.estimates(1, 0) == doctest::Approx(-h / 2.0).epsilon(1e-12));
  CHECK(est.residual_sq == doctest::Approx(nu * nu / 2.0).epsilon(1e-10));
}

TEST_CASE("estimate depends on measurements only (gauge invariance)") {
  std::uint64_t seed = 44;
  const Graph g = oracle::random_connected_graph(9, 0.5, seed);
  auto problem = sample_sync_problem(g, 2, 0.4, 21);
  const auto base = mle_estimate(problem);

  // Shifting the whole constellation leaves every pairwise difference, and
  // hence the centered estimate, untouched.
  auto shifted = problem;
  shifted.truth.rowwise() += Eigen::RowVector2d(3.5, -1.25);
  const auto est = mle_estimate(shifted);
  CHECK(est.estimates == base.estimates);
}

TEST_CASE("mle is unbiased on a fixed random graph") {
  std::uint64_t seed = 1;
  const Graph g = oracle::random_connected_graph(20, 0.4, seed);
  const int trials = 10000;
  const double sigma2 = 1.0;
  const auto report = crb_experiment(g, 1, sigma2, trials, 2025);

  // Var(xhat_i) = sigma^2 * pinv_ii per axis.
  const auto pinv = pseudo_inverse(build_laplacian(g));
  for (int i = 0; i < 20; ++i) {
    const double se = std::sqrt(sigma2 * pinv.matrix(i, i) / trials);
    CHECK(std::abs(report.mean_estimate(i, 0) - report.truth(i, 0)) <= 4.0 * se);
  }
}

TEST_CASE("crb_experiment hand cases") {
  SUBCASE("noiseless run has ratio 1 by convention") {
    const auto report = crb_experiment(Graph::path(3), 1, 0.0, 10, 3);
    CHECK(report.empirical_mse <= 1e-18);
    CHECK(report.crb == 0.0);
    CHECK(report.ratio == 1.0);
  }
  SUBCASE("path-3 crb is trace_pinv = 4/3 for d=1, sigma2=1") {
    const auto report = crb_experiment(Graph::path(3), 1, 1.0, 20000, 4);
    CHECK(report.crb == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    CHECK(std::abs(report.ratio - 1.0) <= 4.0 * std::sqrt(2.0 / 20000.0));
  }
  SUBCASE("complete graph n=4, d=2, sigma2=0.5") {
    const auto report = crb_experiment(Graph::complete(4), 2, 0.5, 20000, 5);
    CHECK(report.crb == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(std::abs(report.ratio - 1.0) <= 4.0 * std::sqrt(2.0 / 20000.0));
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(crb_experiment(Graph(4), 1, 1.0, 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(crb_experiment(Graph::path(3), 1, 1.0, 0, 0), std::invalid_argument);
  }
}

TEST_CASE("adding an edge never increases the crb") {
  std::uint64_t seed = 500;
  for (int rep = 0; rep < 6; ++rep) {
    const int n = 7 + rep;
    Graph g = oracle::random_connected_graph(n, 0.4, seed);
    double before = trace_pinv(build_laplacian(g));
    for (int i = 0; i < n && g.edge_count() < n * (n - 1) / 2; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!g.has_edge(i, j)) {
          g.add_edge(i, j);
          const double after = trace_pinv(build_laplacian(g));
          CHECK(after <= before + 1e-9);
          before = after;
        }
  }
}

TEST_CASE("average crb per node shrinks along the ER sweep p = 1/sqrt(n)") {
  const int d = 1;
  const double sigma2 = 1.0;
  double previous = std::numeric_limits<double>::infinity();
  for (int n : {100, 200, 400}) {
    std::uint64_t seed = 7;
    const Graph g = oracle::random_connected_graph(n, 1.0 / std::sqrt(n), seed);
    const double crb = d * sigma2 * trace_pinv(build_laplacian(g));
    CHECK(crb / n < previous);
    previous = crb / n;
  }
}
