#pragma once

#include <cstddef>
#include <optional>

namespace ddinv {

/// Result of evaluating the explicit max-norm error bound for the diagonal
/// approximate inverse. The bound exists only for n >= 3 with a positive
/// constant; otherwise `bound` is empty and `c_value` is still reported.
struct BoundOutcome {
  std::size_t n = 0;
  double m = 0.0;
  double M = 0.0;
  double c_value = 0.0;
  std::optional<double> bound;

  bool applicable() const noexcept { return bound.has_value(); }
};

/// C(m, M) = 2(n-2)m / (nM + (n-2)m)
///         - (n-2)Mm / ([(n-2)m + M][(n-2)m + 2M])
///         - M / (m(n-1)).
/// Each fraction is formed completely before the subtractions, which run
/// left to right. Requires n >= 3 and 0 < m <= M.
double c_constant(std::size_t n, double m, double M);

/// bound = M / (m^2 (n-1)^2 C(m, M)) when n >= 3 and C > 0. For n < 3 the
/// constant is reported as NaN. Throws InvalidParams only for m <= 0 or M < m.
BoundOutcome theorem1_bound(std::size_t n, double m, double M);

/// f(l) = lM / (lM + (n-1-l)m) - (l-1)m / ((l-1)m + (n-l)M), l in [1, n-1].
double f_lambda(double lambda, std::size_t n, double m, double M);

/// g(l) = (l-1)m / ((l-1)m + (n-l)M) - (l-1)m / ((l-1)m + (n-l)M + M),
/// evaluated as the single fraction (l-1)mM / (D (D + M)), D = (l-1)m + (n-l)M.
double g_lambda(double lambda, std::size_t n, double m, double M);

/// Maximum of f over [1, n-1]: 1/(n-1) when M == m exactly, else
/// (nM - (n-2)m) / (nM + (n-2)m), the value at l = n/2.
double f_max_closed_form(std::size_t n, double m, double M);

/// g(n-1) = (n-2)Mm / ([(n-2)m + M][(n-2)m + 2M]); g is increasing.
double g_max_closed_form(std::size_t n, double m, double M);

/// Large-n limit of C(m, M) when M/m grows slower than n: 2m / (M + m).
double corollary_limit(double m, double M);

}  // namespace ddinv
