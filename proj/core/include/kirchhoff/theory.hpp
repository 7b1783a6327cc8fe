#pragma once

namespace kirchhoff {

/// Closed-form predictions for the scaled trace statistic X_n of an
/// Erdos-Renyi graph, with leading terms only (higher-order remainders are
/// dropped, never estimated).
struct TheoryPrediction {
  int n = 0;
  double p = 0.0;
  double epsilon = 0.0;
  double mean_xn = 0.0;          ///< predicted E[X_n], drops O(log^2 n / (np)^2)
  double band_halfwidth = 0.0;   ///< high-probability fluctuation bound
  double band_probability = 0.0; ///< 1 - 2*eps - 3.01/n^4, clamped to [0,1]
  double cn = 0.0;               ///< 5*sqrt(ln n / (np))
  double assumption_ratio = 0.0; ///< np / ln^6 n (density-regime diagnostic)
  double en_prob_floor = 0.0;    ///< 1 - 3.01/n^11, clamped at 0
};

/// E[X_n] ~ 1 + (2(1-p)/p - 1)/n. Requires n >= 2 and p in (0,1).
double expected_xn(int n, double p);

/// E[X_n] ~ 1 + 2/(gamma n^alpha) - 3/n for the decaying density
/// p = gamma * n^(alpha-1). Requires gamma > 0, 0 < alpha <= 1, and
/// gamma < 1 when alpha == 1.
double expected_xn_vanishing(int n, double gamma, double alpha);

/// High-probability bound on |X_n - E X_n|: 2.02*sqrt(ln(1/eps))/(np),
/// valid with probability at least band_probability(n, eps).
/// Requires 0 < eps <= 1/2.
double fluctuation_bound(int n, double p, double epsilon);

/// 1 - 2*eps - 3.01/n^4, clamped to [0,1].
double band_probability(int n, double epsilon);

/// Largest possible trace of a Laplacian pseudoinverse over all graphs on n
/// nodes: (n^2-1)/6, attained by the path graph.
double max_trace_pinv_bound(int n);

/// Expected Kirchhoff index of a connected draw: n/p + 2/p^2 - 3/p
/// (remainder dropped). Equals n * expected_xn(n,p) / p algebraically.
double expected_kirchhoff(int n, double p);

struct AssumptionDiagnostic {
  double cn = 0.0;
  double ratio = 0.0;          ///< np / ln^6 n
  double en_prob_floor = 0.0;  ///< 1 - 3.01/n^11, clamped at 0
};

AssumptionDiagnostic assumption_diagnostic(int n, double p);

/// Cramer-Rao lower bound for synchronization of translations:
/// trace(Sigma) * trace(L^+). Both inputs must be nonnegative.
double crb_lower_bound(double sigma_trace, double trace_pinv_val);

TheoryPrediction predict(int n, double p, double epsilon);

}  // namespace kirchhoff
