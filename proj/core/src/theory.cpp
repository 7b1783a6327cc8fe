#include "kirchhoff/theory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace kirchhoff {

namespace {

void require_np(int n, double p, const char* who) {
  if (n < 2) throw std::invalid_argument(std::string(who) + ": n must be >= 2");
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument(std::string(who) + ": p must lie in (0,1)");
}

}  // namespace

double expected_xn(int n, double p) {
  require_np(n, p, "expected_xn");
  return 1.0 + (2.0 * (1.0 - p) / p - 1.0) / n;
}

double expected_xn_vanishing(int n, double gamma, double alpha) {
  if (n < 2) throw std::invalid_argument("expected_xn_vanishing: n must be >= 2");
  if (!(gamma > 0.0)) throw std::invalid_argument("expected_xn_vanishing: gamma must be > 0");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("expected_xn_vanishing: alpha must lie in (0,1]");
  if (alpha == 1.0 && gamma >= 1.0)
    throw std::invalid_argument("expected_xn_vanishing: gamma must be < 1 when alpha == 1");
  return 1.0 + 2.0 / (gamma * std::pow(static_cast<double>(n), alpha)) - 3.0 / n;
}

double fluctuation_bound(int n, double p, double epsilon) {
  require_np(n, p, "fluctuation_bound");
  if (!(epsilon > 0.0 && epsilon <= 0.5))
    throw std::invalid_argument("fluctuation_bound: epsilon must lie in (0, 0.5]");
  return 2.02 * std::sqrt(std::log(1.0 / epsilon)) / (n * p);
}

double band_probability(int n, double epsilon) {
  if (n < 2) throw std::invalid_argument("band_probability: n must be >= 2");
  if (!(epsilon > 0.0 && epsilon <= 0.5))
    throw std::invalid_argument("band_probability: epsilon must lie in (0, 0.5]");
  const double nd = n;
  const double value = 1.0 - 2.0 * epsilon - 3.01 / (nd * nd * nd * nd);
  return std::clamp(value, 0.0, 1.0);
}

double max_trace_pinv_bound(int n) {
  if (n < 2) throw std::invalid_argument("max_trace_pinv_bound: n must be >= 2");
  return (static_cast<double>(n) * n - 1.0) / 6.0;
}

double expected_kirchhoff(int n, double p) {
  require_np(n, p, "expected_kirchhoff");
  return n / p + 2.0 / (p * p) - 3.0 / p;
}

AssumptionDiagnostic assumption_diagnostic(int n, double p) {
  require_np(n, p, "assumption_diagnostic");
  const double logn = std::log(static_cast<double>(n));
  AssumptionDiagnostic d;
  d.cn = 5.0 * std::sqrt(logn / (n * p));
  d.ratio = n * p / std::pow(logn, 6.0);
  d.en_prob_floor = std::max(0.0, 1.0 - 3.01 / std::pow(static_cast<double>(n), 11.0));
  return d;
}

double crb_lower_bound(double sigma_trace, double trace_pinv_val) {
  if (sigma_trace < 0.0 || trace_pinv_val < 0.0)
    throw std::invalid_argument("crb_lower_bound: traces must be nonnegative");
  return sigma_trace * trace_pinv_val;
}

TheoryPrediction predict(int n, double p, double epsilon) {
  TheoryPrediction t;
  t.n = n;
  t.p = p;
  t.epsilon = epsilon;
  t.mean_xn = expected_xn(n, p);
  t.band_halfwidth = fluctuation_bound(n, p, epsilon);
  t.band_probability = band_probability(n, epsilon);
  const AssumptionDiagnostic d = assumption_diagnostic(n, p);
  t.cn = d.cn;
  t.assumption_ratio = d.ratio;
  t.en_prob_floor = d.en_prob_floor;
  return t;
}

}  // namespace kirchhoff
