#pragma once

#include <Eigen/Dense>

#include <cstdint>

#include "kirchhoff/graph.hpp"
#include "kirchhoff/spectral.hpp"

namespace kirchhoff {

/// One Erdos-Renyi draw: each of the n(n-1)/2 possible edges is present
/// independently with probability p.
struct ErParams {
  int n = 2;
  double p = 0.5;
  std::uint64_t seed = 0;
};

/// Throws std::invalid_argument unless n >= 2 and 0 < p < 1.
void validate(const ErParams& params);

/// Deterministic sampler: pairs (i,j), i < j, are visited in lexicographic
/// order and consume one uniform variate each from SplitMix64(seed), so a
/// given (n, p, seed) maps to the same graph on every platform.
Graph sample_er(const ErParams& params);

/// Laplacian minus its Erdos-Renyi expectation p(nI - ones): off-diagonal
/// entries are p (no edge) or p-1 (edge), the diagonal holds deg_i - (n-1)p.
/// Rows sum to zero up to roundoff and the operator norm is at most 2(n-1).
struct CenteredLaplacian {
  Eigen::MatrixXd matrix;
  double p = 0.0;
  int size() const { return static_cast<int>(matrix.rows()); }
};

CenteredLaplacian centered_laplacian(const Graph& g, double p);

/// The scaled trace statistic p * trace_pinv(L). Finite for disconnected
/// graphs too (the pseudoinverse drops zero modes); callers that need the
/// Kirchhoff index semantics use kirchhoff_index instead.
double xn_statistic(const Graph& g, double p);

/// Spectral-event cutoff 5*sqrt(n*p*ln(n)). Natural logarithm.
double en_threshold(int n, double p);

/// True iff ||L1||_op <= en_threshold(n, p).
bool check_event_en(const CenteredLaplacian& l1);

/// ||L1||_op computed from the spectrum of L alone: on the orthogonal
/// complement of the all-ones vector, L1 = L - n*p*I, so the nonzero-mode
/// eigenvalues of L1 are lambda_i - n*p for i >= 2 and the remaining one is
/// exactly 0. Saves the second eigendecomposition in the experiment loop.
double l1_operator_norm_from_spectrum(const Eigen::VectorXd& laplacian_eigenvalues, double p);

/// trace(L1^k) for k in {1,2,3,4}, summed over the eigenvalues of L1.
/// Throws std::invalid_argument for k outside that range.
double l1_trace_power(const CenteredLaplacian& l1, int k);

}  // namespace kirchhoff
