#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <utility>
#include <vector>

#include "kirchhoff/graph.hpp"

namespace kirchhoff {

/// Synchronization of translations: estimate n vectors in R^d from noisy
/// pairwise differences measured along the edges of a connected graph.
/// The truth is centered (sum of rows = 0) since a global shift is
/// unobservable; noise is isotropic N(0, sigma2 * I_d) per edge.
struct SyncProblem {
  Graph graph;
  int dimension = 1;
  double sigma2 = 1.0;
  Eigen::MatrixXd truth;                      // n x d, columns centered
  std::vector<std::pair<int, int>> edges;     // i < j, lexicographic
  Eigen::MatrixXd measurements;               // one row per edge: x_i - x_j + noise
};

/// Truth rows are i.i.d. standard normal then centered; one Gaussian noise
/// vector per edge. Deterministic in seed (truth and noise use split
/// sub-streams of it). Throws on a disconnected graph.
SyncProblem sample_sync_problem(const Graph& g, int dimension, double sigma2,
                                std::uint64_t seed);

struct SyncEstimate {
  Eigen::MatrixXd estimates;  // n x d, columns centered
  double residual_sq = 0.0;   // sum over nodes of |x_i - xhat_i|^2
};

/// Least-squares maximum-likelihood estimate: per axis, solve L xhat = b
/// with b_i the signed sum of incident measurements, via the Laplacian
/// pseudoinverse; the estimate is then centered.
SyncEstimate mle_estimate(const SyncProblem& problem);

/// Monte Carlo check of the Cramer-Rao bound. The truth is fixed across
/// trials (drawn from seed); each trial redraws the measurement noise.
struct CrbReport {
  double empirical_mse = 0.0;   // mean residual_sq over trials
  double crb = 0.0;             // d * sigma2 * trace_pinv(L)
  double ratio = 1.0;           // empirical_mse / crb, 1 by convention when crb = 0
  long trials = 0;
  Eigen::MatrixXd mean_estimate;  // n x d, for unbiasedness checks
  Eigen::MatrixXd truth;          // n x d
};

CrbReport crb_experiment(const Graph& g, int dimension, double sigma2, long trials,
                         std::uint64_t seed);

}  // namespace kirchhoff
