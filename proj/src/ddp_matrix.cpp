#include "ddinv/ddp_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "ddinv/error.hpp"
#include "ddinv/matrix_io.hpp"
#include "factorization.hpp"

namespace ddinv {

namespace {

std::string index_pair(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

// Uniform double on [0, 1) from the top 53 bits. std::uniform_real_distribution
// is implementation-defined, so it is avoided to keep instances portable.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * unit_uniform(rng);
}

}  // namespace

double offdiag_row_sum(const DenseMatrix& a, std::size_t i) noexcept {
  double s = 0.0;
  for (std::size_t j = 0; j < a.order(); ++j)
    if (j != i) s += a(i, j);
  return s;
}

DdpMatrix validate_ddp(DenseMatrix a, bool require_symmetric) {
  const auto n = a.order();
  if (n < 2) {
    throw Error(ErrorKind::OrderTooSmall,
                ": n = " + std::to_string(n) + ", need at least one off-diagonal entry");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(a(i, j) > 0.0)) throw Error(ErrorKind::NonPositiveEntry, index_pair(i, j));

  for (std::size_t i = 0; i < n; ++i) {
    const double row_sum = offdiag_row_sum(a, i);
    if (a(i, i) < row_sum) {
      throw Error(ErrorKind::DominanceViolated, "(" + std::to_string(i + 1) + "," +
                                                    format_shortest(row_sum) + "," +
                                                    format_shortest(a(i, i)) + ")");
    }
  }

  bool symmetric = true;
  for (std::size_t i = 0; i < n && symmetric; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a(i, j) != a(j, i)) {
        if (require_symmetric) throw Error(ErrorKind::NotSymmetric, index_pair(i, j));
        symmetric = false;
        break;
      }
    }
  }
  return DdpMatrix(std::move(a), symmetric);
}

DominanceParams dominance_params(const DdpMatrix& t) {
  const auto n = t.order();
  DominanceParams p;
  p.m = t(0, 1);
  p.delta.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      p.m = std::min(p.m, t(i, j));
      p.max_offdiag = std::max(p.max_offdiag, t(i, j));
    }
    p.delta[i] = t(i, i) - offdiag_row_sum(t.matrix(), i);
    p.max_delta = std::max(p.max_delta, p.delta[i]);
  }
  p.M = std::max(p.max_offdiag, p.max_delta);
  return p;
}

DdpMatrix worst_case_example(std::size_t n, double m, double M) {
  if (n < 3 || !(m > 0.0) || !(M >= m) || !std::isfinite(M)) {
    throw Error(ErrorKind::InvalidParams, ": worst_case_example needs n >= 3 and 0 < m <= M");
  }
  DenseMatrix a(n, m);
  const double k = static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double target = (i + 1 < n ? M : m) * k;
    // The row sum guard only matters when (n-1)*m rounds below the
    // sequential sum of n-1 copies of m.
    a(i, i) = std::max(target, offdiag_row_sum(a, i));
  }
  return validate_ddp(std::move(a), true);
}

DdpMatrix random_ddp(const RandomDdpParams& params) {
  const auto n = params.n;
  if (n < 2 || !(params.m > 0.0) || !(params.off_max >= params.m) || !(params.slack_max >= 0.0) ||
      !std::isfinite(params.off_max) || !std::isfinite(params.slack_max)) {
    throw Error(ErrorKind::InvalidParams,
                ": random_ddp needs n >= 2, 0 < m <= off_max and slack_max >= 0");
  }
  std::mt19937_64 rng(params.seed);
  DenseMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // Clamp in case lo + (hi - lo) * u rounds past hi.
      const double v = std::min(uniform_in(rng, params.m, params.off_max), params.off_max);
      a(i, j) = v;
      a(j, i) = v;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double slack = std::min(uniform_in(rng, 0.0, params.slack_max), params.slack_max);
    a(i, i) = offdiag_row_sum(a, i) + slack;
  }
  return validate_ddp(std::move(a), true);
}

bool is_positive_definite(const DdpMatrix& t) {
  if (!t.symmetric()) throw Error(ErrorKind::NotSymmetric, ": positive definiteness check");
  return detail::cholesky(t.matrix(), detail::pivot_floor(t.matrix())).has_value();
}

}  // namespace ddinv
