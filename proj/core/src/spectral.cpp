#include "kirchhoff/spectral.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace kirchhoff {

namespace {

void require_symmetric(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("symmetric_eigen: matrix is not square");
  if (m.rows() == 0)
    throw std::invalid_argument("symmetric_eigen: matrix is empty");
  const double scale = m.cwiseAbs().maxCoeff();
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * std::max(scale, 1.0))
    throw std::invalid_argument("symmetric_eigen: matrix is not symmetric");
}

SpectralSummary summarize(Eigen::VectorXd eigenvalues) {
  SpectralSummary s;
  s.eigenvalues = std::move(eigenvalues);
  s.zero_threshold = zero_eigenvalue_threshold(s.eigenvalues);
  for (int i = 0; i < s.eigenvalues.size(); ++i)
    if (std::abs(s.eigenvalues(i)) <= s.zero_threshold) ++s.zero_count;
  return s;
}

}  // namespace

double zero_eigenvalue_threshold(const Eigen::VectorXd& eigenvalues) {
  const double lam_max = eigenvalues.size() ? eigenvalues.cwiseAbs().maxCoeff() : 0.0;
  const double n = static_cast<double>(eigenvalues.size());
  return n * std::numeric_limits<double>::epsilon() * std::max(lam_max, 1.0);
}

SpectralSummary symmetric_eigenvalues(const Eigen::MatrixXd& m) {
  require_symmetric(m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("symmetric_eigenvalues: eigensolver failed to converge");
  return summarize(solver.eigenvalues());
}

SymmetricEigen symmetric_eigen(const Eigen::MatrixXd& m) {
  require_symmetric(m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("symmetric_eigen: eigensolver failed to converge");
  return SymmetricEigen{summarize(solver.eigenvalues()), solver.eigenvectors()};
}

double trace_pinv_from_spectrum(const SpectralSummary& s) {
  double sum = 0.0;
  for (int i = 0; i < s.eigenvalues.size(); ++i) {
    const double lam = s.eigenvalues(i);
    if (std::abs(lam) > s.zero_threshold) sum += 1.0 / lam;
  }
  return sum;
}

double trace_pinv(const Laplacian& lap) {
  return trace_pinv_from_spectrum(symmetric_eigenvalues(lap.matrix));
}

LaplacianPinv pseudo_inverse(const Laplacian& lap) {
  const SymmetricEigen eig = symmetric_eigen(lap.matrix);
  const Eigen::VectorXd& lam = eig.summary.eigenvalues;
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(lam.size());
  for (int i = 0; i < lam.size(); ++i)
    if (std::abs(lam(i)) > eig.summary.zero_threshold) inv(i) = 1.0 / lam(i);
  Eigen::MatrixXd p = eig.eigenvectors * inv.asDiagonal() * eig.eigenvectors.transpose();
  p = ((p + p.transpose()) * 0.5).eval();  // exact symmetry despite roundoff
  return LaplacianPinv{std::move(p)};
}

double resistance_distance(const LaplacianPinv& pinv, int i, int j) {
  const int n = pinv.size();
  if (i < 0 || i >= n || j < 0 || j >= n)
    throw std::invalid_argument("resistance_distance: node index out of range");
  if (i == j) return 0.0;
  return pinv.matrix(i, i) + pinv.matrix(j, j) - 2.0 * pinv.matrix(i, j);
}

double kirchhoff_index(const Graph& g) {
  if (!is_connected(g)) return std::numeric_limits<double>::infinity();
  return g.node_count() * trace_pinv(build_laplacian(g));
}

double operator_norm(const Eigen::MatrixXd& m) {
  const SpectralSummary s = symmetric_eigenvalues(m);
  return std::max(std::abs(s.eigenvalues(0)), std::abs(s.eigenvalues(s.eigenvalues.size() - 1)));
}

}  // namespace kirchhoff
