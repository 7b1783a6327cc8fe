#include "kirchhoff/er_model.hpp"

#include <cmath>
#include <stdexcept>

#include "kirchhoff/rng.hpp"

namespace kirchhoff {

void validate(const ErParams& params) {
  if (params.n < 2) throw std::invalid_argument("ErParams: n must be >= 2");
  if (!(params.p > 0.0 && params.p < 1.0))
    throw std::invalid_argument("ErParams: p must lie in (0,1)");
}

Graph sample_er(const ErParams& params) {
  validate(params);
  SplitMix64 rng(params.seed);
  Graph g(params.n);
  for (int i = 0; i < params.n; ++i)
    for (int j = i + 1; j < params.n; ++j)
      if (rng.next_double() < params.p) g.add_edge(i, j);
  return g;
}

CenteredLaplacian centered_laplacian(const Graph& g, double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("centered_laplacian: p must lie in (0,1)");
  const int n = g.node_count();
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      m(i, j) = g.has_edge(i, j) ? p - 1.0 : p;
    }
    m(i, i) = g.degree(i) - (n - 1) * p;
  }
  return CenteredLaplacian{std::move(m), p};
}

double xn_statistic(const Graph& g, double p) {
  return p * trace_pinv(build_laplacian(g));
}

double en_threshold(int n, double p) {
  return 5.0 * std::sqrt(n * p * std::log(static_cast<double>(n)));
}

bool check_event_en(const CenteredLaplacian& l1) {
  return operator_norm(l1.matrix) <= en_threshold(l1.size(), l1.p);
}

double l1_operator_norm_from_spectrum(const Eigen::VectorXd& laplacian_eigenvalues,
                                      double p) {
  const int n = static_cast<int>(laplacian_eigenvalues.size());
  const double np = n * p;
  double norm = 0.0;  // the kernel mode of L1 contributes |t_1| = 0
  for (int i = 1; i < n; ++i)
    norm = std::max(norm, std::abs(laplacian_eigenvalues(i) - np));
  return norm;
}

double l1_trace_power(const CenteredLaplacian& l1, int k) {
  if (k < 1 || k > 4)
    throw std::invalid_argument("l1_trace_power: k must be in {1,2,3,4}");
  const SpectralSummary s = symmetric_eigenvalues(l1.matrix);
  double sum = 0.0;
  for (int i = 0; i < s.eigenvalues.size(); ++i) {
    double term = s.eigenvalues(i);
    for (int c = 1; c < k; ++c) term *= s.eigenvalues(i);
    sum += term;
  }
  return sum;
}

}  // namespace kirchhoff
