#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ddinv/bounds.hpp"
#include "ddinv/ddp_matrix.hpp"
#include "ddinv/dense_matrix.hpp"

namespace ddinv {

/// The diagonal approximate inverse S = diag(1/t_{1,1}, ..., 1/t_{n,n}),
/// stored as its diagonal.
class DiagApprox {
 public:
  explicit DiagApprox(std::vector<double> recip_diag) : recip_(std::move(recip_diag)) {}

  std::size_t order() const noexcept { return recip_.size(); }
  std::span<const double> recip_diag() const noexcept { return recip_; }

  /// y_i = x_i / t_{i,i}, computed as x_i * recip_diag[i].
  std::vector<double> apply(std::span<const double> x) const;

  /// S expanded to a dense matrix.
  DenseMatrix to_dense() const;

 private:
  std::vector<double> recip_;
};

DiagApprox diag_approx(const DdpMatrix& t);

/// V = I - TS and W = SV.
struct ResidualPair {
  DenseMatrix v;
  DenseMatrix w;
};

/// Entries in closed form: v_{i,j} = -t_{i,j}/t_{j,j} and
/// w_{i,j} = -t_{i,j}/(t_{i,i} t_{j,j}) off the diagonal, zero on it.
ResidualPair residuals(const DdpMatrix& t);

/// The same pair formed by explicit products I - T*S and S*V. Used only to
/// cross-check residuals().
ResidualPair residuals_by_product(const DdpMatrix& t);

/// max over i, j, k of |w_{i,j}| and |w_{i,j} - w_{i,k}|.
double residual_spread(const DenseMatrix& w);

/// Dense inverse by Cholesky (symmetric T) or partially pivoted LU,
/// followed by one step of iterative refinement. Throws SingularMatrix.
DenseMatrix exact_inverse(const DdpMatrix& t);

struct ErrorReport {
  DenseMatrix f_matrix;  ///< F = T^{-1} - S
  double max_norm = 0.0;
  BoundOutcome bound;
  std::optional<double> ratio;  ///< max_norm / bound, when applicable
  /// All off-diagonal entries of T^{-1} are <= 0. Diagnostic only.
  bool inverse_nonpositive_offdiag = false;
  DominanceParams params;
};

/// Throws NotSymmetric for asymmetric T: the bound is stated for the
/// symmetric case only.
ErrorReport error_report(const DdpMatrix& t);
ErrorReport error_report(const DdpMatrix& t, const DenseMatrix& inverse);

/// ||F - (FV + W)||, with F from the dense oracle.
double check_recursion_identity(const DdpMatrix& t);

/// max_i |sum_k f_{i,k} t_{k,i}|.
double check_hold_identity(const DdpMatrix& t);

/// Per-row extremes of F: how far min_k f_{i,k} rises above zero and how far
/// max_k f_{i,k} drops below it, maximized over rows. Both are <= 0 when
/// every row of F has entries of both signs (or zeros).
struct RowSignExcess {
  double min_above_zero = 0.0;
  double max_below_zero = 0.0;
};
RowSignExcess row_sign_excess(const DenseMatrix& f);

struct DiscussionReport {
  double error = 0.0;
  double scaled_error = 0.0;  ///< error * (n-1)^2 * m
  /// Largest deviation between the oracle inverse and the entrywise
  /// formulas printed alongside the extremal example. Diagnostic only;
  /// those formulas do not reproduce the true inverse.
  double printed_closed_form_gap = 0.0;
};

DiscussionReport discussion_example_report(std::size_t n, double m, double M);

}  // namespace ddinv
