#include "kirchhoff/sync.hpp"

#include <cmath>
#include <stdexcept>

#include "kirchhoff/rng.hpp"
#include "kirchhoff/spectral.hpp"
#include "kirchhoff/theory.hpp"

namespace kirchhoff {

namespace {

void validate_inputs(const Graph& g, int dimension, double sigma2) {
  if (dimension < 1) throw std::invalid_argument("sync: dimension must be >= 1");
  if (sigma2 < 0.0) throw std::invalid_argument("sync: sigma2 must be >= 0");
  if (!is_connected(g))
    throw std::invalid_argument("sync: graph must be connected (estimation is "
                                "ill-posed across components)");
}

void center_columns(Eigen::MatrixXd& m) {
  m.rowwise() -= m.colwise().mean();
}

// Sub-stream tags hashed with the problem seed; documented so recorded seeds
// stay meaningful.
constexpr std::uint64_t kTruthStream = 0;
constexpr std::uint64_t kNoiseStream = 1;

Eigen::MatrixXd draw_truth(int n, int d, std::uint64_t seed) {
  SplitMix64 rng(fnv1a64({seed, kTruthStream}));
  Eigen::MatrixXd truth(n, d);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < d; ++a) truth(i, a) = rng.next_gaussian();
  center_columns(truth);
  return truth;
}

// Noiseless differences x_i - x_j per edge, plus N(0, sigma2 I) noise.
Eigen::MatrixXd draw_measurements(const Eigen::MatrixXd& truth,
                                  const std::vector<std::pair<int, int>>& edges,
                                  double sigma2, SplitMix64& rng) {
  const int d = static_cast<int>(truth.cols());
  const double sd = std::sqrt(sigma2);
  Eigen::MatrixXd h(static_cast<int>(edges.size()), d);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto [i, j] = edges[k];
    for (int a = 0; a < d; ++a)
      h(static_cast<int>(k), a) = truth(i, a) - truth(j, a) + sd * rng.next_gaussian();
  }
  return h;
}

// Normal-equations right-hand side: b_i = sum of h over edges leaving i,
// minus h over edges entering i.
Eigen::MatrixXd stack_rhs(int n, const std::vector<std::pair<int, int>>& edges,
                          const Eigen::MatrixXd& h) {
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, h.cols());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto [i, j] = edges[k];
    b.row(i) += h.row(static_cast<int>(k));
    b.row(j) -= h.row(static_cast<int>(k));
  }
  return b;
}

Eigen::MatrixXd solve_centered(const LaplacianPinv& pinv, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd x = pinv.matrix * b;
  center_columns(x);  // pinv already annihilates the all-ones direction; this
                      // removes the residual roundoff component
  return x;
}

}  // namespace

SyncProblem sample_sync_problem(const Graph& g, int dimension, double sigma2,
                                std::uint64_t seed) {
  validate_inputs(g, dimension, sigma2);
  SyncProblem problem{g, dimension, sigma2, {}, g.edges(), {}};
  problem.truth = draw_truth(g.node_count(), dimension, seed);
  SplitMix64 noise_rng(fnv1a64({seed, kNoiseStream, 0}));
  problem.measurements = draw_measurements(problem.truth, problem.edges, sigma2, noise_rng);
  return problem;
}

SyncEstimate mle_estimate(const SyncProblem& problem) {
  const LaplacianPinv pinv = pseudo_inverse(build_laplacian(problem.graph));
  const Eigen::MatrixXd b =
      stack_rhs(problem.graph.node_count(), problem.edges, problem.measurements);
  SyncEstimate est;
  est.estimates = solve_centered(pinv, b);
  est.residual_sq = (problem.truth - est.estimates).squaredNorm();
  return est;
}

CrbReport crb_experiment(const Graph& g, int dimension, double sigma2, long trials,
                         std::uint64_t seed) {
  validate_inputs(g, dimension, sigma2);
  if (trials < 1) throw std::invalid_argument("sync: trials must be >= 1");

  const int n = g.node_count();
  const Laplacian lap = build_laplacian(g);
  const LaplacianPinv pinv = pseudo_inverse(lap);
  const auto edges = g.edges();

  CrbReport report;
  report.trials = trials;
  report.truth = draw_truth(n, dimension, seed);
  // Isotropic noise: trace(Sigma) = d * sigma2.
  report.crb = crb_lower_bound(dimension * sigma2, trace_pinv(lap));
  report.mean_estimate = Eigen::MatrixXd::Zero(n, dimension);

  double mse_sum = 0.0;
  for (long t = 0; t < trials; ++t) {
    SplitMix64 noise_rng(fnv1a64({seed, kNoiseStream, static_cast<std::uint64_t>(t)}));
    const Eigen::MatrixXd h = draw_measurements(report.truth, edges, sigma2, noise_rng);
    const Eigen::MatrixXd est = solve_centered(pinv, stack_rhs(n, edges, h));
    mse_sum += (report.truth - est).squaredNorm();
    report.mean_estimate += est;
  }
  report.mean_estimate /= static_cast<double>(trials);
  report.empirical_mse = mse_sum / static_cast<double>(trials);
  report.ratio = report.crb == 0.0 ? 1.0 : report.empirical_mse / report.crb;
  return report;
}

}  // namespace kirchhoff
