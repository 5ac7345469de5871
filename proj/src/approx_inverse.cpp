#include "ddinv/approx_inverse.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "ddinv/error.hpp"
#include "factorization.hpp"

namespace ddinv {

std::vector<double> DiagApprox::apply(std::span<const double> x) const {
  if (x.size() != recip_.size()) {
    throw Error(ErrorKind::DimensionMismatch, ": preconditioner of order " +
                                                  std::to_string(recip_.size()) + ", vector length " +
                                                  std::to_string(x.size()));
  }
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] * recip_[i];
  return y;
}

DenseMatrix DiagApprox::to_dense() const {
  DenseMatrix s(recip_.size());
  for (std::size_t i = 0; i < recip_.size(); ++i) s(i, i) = recip_[i];
  return s;
}

DiagApprox diag_approx(const DdpMatrix& t) {
  std::vector<double> recip(t.order());
  for (std::size_t i = 0; i < t.order(); ++i) recip[i] = 1.0 / t(i, i);
  return DiagApprox(std::move(recip));
}

ResidualPair residuals(const DdpMatrix& t) {
  const auto n = t.order();
  ResidualPair r{DenseMatrix(n), DenseMatrix(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      r.v(i, j) = -t(i, j) / t(j, j);
      r.w(i, j) = -t(i, j) / (t(i, i) * t(j, j));
    }
  }
  return r;
}

ResidualPair residuals_by_product(const DdpMatrix& t) {
  const auto s = diag_approx(t).to_dense();
  DenseMatrix v = DenseMatrix::identity(t.order()) - t.matrix() * s;
  DenseMatrix w = s * v;
  return {std::move(v), std::move(w)};
}

double residual_spread(const DenseMatrix& w) {
  const auto n = w.order();
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = w.row(i);
    const auto [lo, hi] = std::minmax_element(row.begin(), row.end());
    // max_{j,k} |w_ij - w_ik| is attained by the row extremes.
    best = std::max({best, std::abs(*lo), std::abs(*hi), *hi - *lo});
  }
  return best;
}

DenseMatrix exact_inverse(const DdpMatrix& t) {
  const auto& a = t.matrix();
  const auto n = a.order();
  const double floor = detail::pivot_floor(a);

  std::function<void(std::span<double>)> solve;
  std::optional<DenseMatrix> chol;
  std::optional<detail::LuFactors> lu;
  if (t.symmetric()) {
    chol = detail::cholesky(a, floor);
    if (!chol) throw Error(ErrorKind::SingularMatrix, ": Cholesky pivot below threshold");
    solve = [&](std::span<double> b) { detail::cholesky_solve(*chol, b); };
  } else {
    lu = detail::lu_factor(a, floor);
    if (!lu) throw Error(ErrorKind::SingularMatrix, ": LU pivot below threshold");
    solve = [&](std::span<double> b) { detail::lu_solve(*lu, b); };
  }

  // Columns are solved one at a time into a scratch buffer.
  auto solve_columns = [&](const DenseMatrix& rhs) {
    DenseMatrix x(n);
    std::vector<double> col(n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) col[i] = rhs(i, j);
      solve(col);
      for (std::size_t i = 0; i < n; ++i) x(i, j) = col[i];
    }
    return x;
  };

  DenseMatrix x = solve_columns(DenseMatrix::identity(n));
  // One refinement step: X <- X + T^{-1}(I - TX).
  const DenseMatrix residual = DenseMatrix::identity(n) - a * x;
  return x + solve_columns(residual);
}

ErrorReport error_report(const DdpMatrix& t) {
  if (!t.symmetric()) throw Error(ErrorKind::NotSymmetric, ": error bound requires symmetric T");
  return error_report(t, exact_inverse(t));
}

ErrorReport error_report(const DdpMatrix& t, const DenseMatrix& inverse) {
  if (!t.symmetric()) throw Error(ErrorKind::NotSymmetric, ": error bound requires symmetric T");
  const auto n = t.order();
  ErrorReport rep;
  rep.f_matrix = inverse - diag_approx(t).to_dense();
  rep.max_norm = max_norm(rep.f_matrix);
  rep.params = dominance_params(t);
  rep.bound = theorem1_bound(n, rep.params.m, rep.params.M);
  if (rep.bound.applicable()) rep.ratio = rep.max_norm / *rep.bound.bound;
  rep.inverse_nonpositive_offdiag = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && inverse(i, j) > 0.0) rep.inverse_nonpositive_offdiag = false;
  return rep;
}

namespace {

DenseMatrix f_matrix(const DdpMatrix& t) {
  return exact_inverse(t) - diag_approx(t).to_dense();
}

}  // namespace

double check_recursion_identity(const DdpMatrix& t) {
  const DenseMatrix f = f_matrix(t);
  const auto [v, w] = residuals(t);
  return max_abs_diff(f, f * v + w);
}

double check_hold_identity(const DdpMatrix& t) {
  const DenseMatrix f = f_matrix(t);
  const auto n = t.order();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += f(i, k) * t(k, i);
    worst = std::max(worst, std::abs(s));
  }
  return worst;
}

RowSignExcess row_sign_excess(const DenseMatrix& f) {
  RowSignExcess out{-INFINITY, -INFINITY};
  for (std::size_t i = 0; i < f.order(); ++i) {
    const auto row = f.row(i);
    const auto [lo, hi] = std::minmax_element(row.begin(), row.end());
    out.min_above_zero = std::max(out.min_above_zero, *lo);
    out.max_below_zero = std::max(out.max_below_zero, -*hi);
  }
  return out;
}

DiscussionReport discussion_example_report(std::size_t n, double m, double M) {
  const DdpMatrix t = worst_case_example(n, m, M);
  const DenseMatrix inv = exact_inverse(t);
  DiscussionReport rep;
  rep.error = max_norm(inv - diag_approx(t).to_dense());
  const double nm1 = static_cast<double>(n - 1);
  rep.scaled_error = rep.error * nm1 * nm1 * m;

  // Printed formulas: rows 1..n-1 and row n; column n of the leading block
  // is filled by symmetry from row n.
  const double big = nm1 * M - m;
  const double small = (static_cast<double>(n) - 2.0) * m;
  double gap = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t r = (j + 1 == n) ? j : i;
      const std::size_t c = (j + 1 == n) ? i : j;
      const double delta = (r == c) ? 1.0 : 0.0;
      const double printed = (r + 1 == n)
                                 ? delta / small - 1.0 / ((static_cast<double>(n) - 2.0) * big)
                                 : delta / big - m / (big * big);
      gap = std::max(gap, std::abs(inv(i, j) - printed));
    }
  }
  rep.printed_closed_form_gap = gap;
  return rep;
}

}  // namespace ddinv
