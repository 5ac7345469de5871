#pragma once

#include <cstdint>
#include <vector>

#include "ddinv/dense_matrix.hpp"

namespace ddinv {

/// A matrix T with strictly positive entries whose diagonal dominates each
/// row: t_{i,i} >= sum_{j != i} t_{i,j}. Only obtainable through
/// validate_ddp() or the generators below, so holding one means the
/// conditions were checked.
class DdpMatrix {
 public:
  const DenseMatrix& matrix() const noexcept { return inner_; }
  std::size_t order() const noexcept { return inner_.order(); }
  double operator()(std::size_t i, std::size_t j) const noexcept { return inner_(i, j); }

  /// True when t_{i,j} == t_{j,i} holds exactly for all i, j.
  bool symmetric() const noexcept { return symmetric_; }

 private:
  DdpMatrix(DenseMatrix inner, bool symmetric) : inner_(std::move(inner)), symmetric_(symmetric) {}
  friend DdpMatrix validate_ddp(DenseMatrix a, bool require_symmetric);

  DenseMatrix inner_;
  bool symmetric_ = false;
};

/// Scalars governing the approximation error.
///   m     smallest off-diagonal entry (both triangles are scanned)
///   M     max(largest off-diagonal entry, largest slack)
///   delta row slacks t_{i,i} - sum_{j != i} t_{i,j}
struct DominanceParams {
  double m = 0.0;
  double M = 0.0;
  std::vector<double> delta;
  double max_offdiag = 0.0;
  double max_delta = 0.0;
};

/// Checks positivity, row dominance and (optionally) exact symmetry.
/// Comparisons are exact; no tolerance is applied. Throws
/// OrderTooSmall, NonPositiveEntry, DominanceViolated or NotSymmetric.
/// The symmetric() flag of the result reflects the actual matrix even when
/// symmetry was not required.
DdpMatrix validate_ddp(DenseMatrix a, bool require_symmetric = true);

DominanceParams dominance_params(const DdpMatrix& t);

/// sum_{j != i} t_{i,j}, accumulated in ascending j. Every routine that
/// compares against a row sum goes through this so generator output and
/// validation agree bit-for-bit.
double offdiag_row_sum(const DenseMatrix& a, std::size_t i) noexcept;

/// Extremal instance: off-diagonals m, diagonal (n-1)M on the first n-1
/// rows and (n-1)m on the last. Requires n >= 3 and 0 < m <= M.
DdpMatrix worst_case_example(std::size_t n, double m, double M);

struct RandomDdpParams {
  std::size_t n = 0;
  double m = 1.0;         ///< lower end of the off-diagonal range
  double off_max = 1.0;   ///< upper end of the off-diagonal range
  double slack_max = 0.0; ///< row slacks drawn from [0, slack_max]
  std::uint64_t seed = 0;
};

/// Symmetric random instance. Off-diagonals and slacks are uniform draws
/// from a 64-bit Mersenne Twister; the diagonal is the row sum plus slack.
/// Output depends only on the parameters, on every platform.
DdpMatrix random_ddp(const RandomDdpParams& params);

/// Cholesky with pivot floor n * eps * max diagonal. Throws NotSymmetric
/// for an asymmetric input.
bool is_positive_definite(const DdpMatrix& t);

}  // namespace ddinv
