#include "factorization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace ddinv::detail {

double pivot_floor(const DenseMatrix& a) noexcept {
  double max_diag = 0.0;
  for (std::size_t i = 0; i < a.order(); ++i) max_diag = std::max(max_diag, std::abs(a(i, i)));
  return static_cast<double>(a.order()) * std::numeric_limits<double>::epsilon() * max_diag;
}

std::optional<DenseMatrix> cholesky(const DenseMatrix& a, double floor) {
  const auto n = a.order();
  DenseMatrix l(n);
  for (std::size_t j = 0; j < n; ++j) {
    double pivot = a(j, j);
    for (std::size_t k = 0; k < j; ++k) pivot -= l(j, k) * l(j, k);
    if (!(pivot > floor)) return std::nullopt;
    const double ljj = std::sqrt(pivot);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / ljj;
    }
  }
  return l;
}

void cholesky_solve(const DenseMatrix& l, std::span<double> b) {
  const auto n = l.order();
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * b[k];
    b[i] = s / l(i, i);
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= l(k, i) * b[k];
    b[i] = s / l(i, i);
  }
}

std::optional<LuFactors> lu_factor(const DenseMatrix& a, double floor) {
  const auto n = a.order();
  LuFactors f{a, std::vector<std::size_t>(n)};
  std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});
  auto& lu = f.lu;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(lu(i, k)) > std::abs(lu(p, k))) p = i;
    if (!(std::abs(lu(p, k)) > floor)) return std::nullopt;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(p, j));
      std::swap(f.perm[k], f.perm[p]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double factor = lu(i, k) / lu(k, k);
      lu(i, k) = factor;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= factor * lu(k, j);
    }
  }
  return f;
}

void lu_solve(const LuFactors& f, std::span<double> b) {
  const auto n = f.lu.order();
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[f.perm[i]];
    for (std::size_t k = 0; k < i; ++k) s -= f.lu(i, k) * y[k];
    y[i] = s;
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = y[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= f.lu(i, k) * y[k];
    y[i] = s / f.lu(i, i);
  }
  std::copy(y.begin(), y.end(), b.begin());
}

}  // namespace ddinv::detail
