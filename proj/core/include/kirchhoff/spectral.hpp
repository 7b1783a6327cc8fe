#pragma once

#include <Eigen/Dense>

#include "kirchhoff/graph.hpp"

namespace kirchhoff {

/// Eigenvalues of a symmetric matrix, ascending, with the near-zero ones
/// classified by a numerical-rank cutoff.
struct SpectralSummary {
  Eigen::VectorXd eigenvalues;
  int zero_count = 0;
  double zero_threshold = 0.0;
};

struct SymmetricEigen {
  SpectralSummary summary;
  Eigen::MatrixXd eigenvectors;  // columns, same order as summary.eigenvalues
};

/// Cutoff below which an eigenvalue counts as zero:
/// n * eps * max(|lambda|_max, 1).
double zero_eigenvalue_threshold(const Eigen::VectorXd& eigenvalues);

/// Eigenvalues only. Throws std::invalid_argument unless the input is square
/// and symmetric to 1e-12 relative.
SpectralSummary symmetric_eigenvalues(const Eigen::MatrixXd& m);

/// Full decomposition m = V diag(lambda) V^T, same input contract.
SymmetricEigen symmetric_eigen(const Eigen::MatrixXd& m);

/// Moore-Penrose pseudoinverse of a graph Laplacian. Symmetric, and for a
/// connected graph its kernel is spanned by the all-ones vector.
struct LaplacianPinv {
  Eigen::MatrixXd matrix;
  int size() const { return static_cast<int>(matrix.rows()); }
};

/// Sum of reciprocals of the numerically nonzero eigenvalues. Finite for any
/// Laplacian; zero modes are dropped. This is the hot path of the Monte Carlo
/// experiment, so the pseudoinverse matrix is never formed here.
double trace_pinv(const Laplacian& lap);
double trace_pinv_from_spectrum(const SpectralSummary& s);

LaplacianPinv pseudo_inverse(const Laplacian& lap);

/// Effective resistance between nodes i and j read off the pseudoinverse:
/// pinv(i,i) + pinv(j,j) - 2 pinv(i,j). Returns 0 for i == j. Only
/// meaningful when i and j lie in the same connected component; callers gate
/// on connectivity.
double resistance_distance(const LaplacianPinv& pinv, int i, int j);

/// n * trace_pinv for connected graphs, +infinity otherwise. Equals the sum
/// of resistance distances over all unordered pairs.
double kirchhoff_index(const Graph& g);

/// Largest absolute eigenvalue of a symmetric matrix.
double operator_norm(const Eigen::MatrixXd& m);

}  // namespace kirchhoff
