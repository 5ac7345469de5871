#include "ddinv/bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ddinv/error.hpp"

namespace ddinv {

namespace {

void check_scalars(double m, double M) {
  if (!(m > 0.0) || !(M >= m) || !std::isfinite(M)) {
    throw Error(ErrorKind::InvalidParams, ": need 0 < m <= M, got m=" + std::to_string(m) +
                                              " M=" + std::to_string(M));
  }
}

void check_order(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidParams, ": n must be >= 3, got " + std::to_string(n));
}

void check_lambda(double lambda, std::size_t n) {
  if (!(lambda >= 1.0 && lambda <= static_cast<double>(n - 1))) {
    throw Error(ErrorKind::DomainError,
                ": lambda=" + std::to_string(lambda) + " outside [1, " + std::to_string(n - 1) + "]");
  }
}

}  // namespace

double c_constant(std::size_t n, double m, double M) {
  check_order(n);
  check_scalars(m, M);
  const double nd = static_cast<double>(n);
  const double k = nd - 2.0;
  const double first = 2.0 * k * m / (nd * M + k * m);
  const double second = k * M * m / ((k * m + M) * (k * m + 2.0 * M));
  const double third = M / (m * (nd - 1.0));
  return first - second - third;
}

BoundOutcome theorem1_bound(std::size_t n, double m, double M) {
  check_scalars(m, M);
  BoundOutcome out{n, m, M, std::numeric_limits<double>::quiet_NaN(), std::nullopt};
  if (n < 3) return out;
  out.c_value = c_constant(n, m, M);
  if (out.c_value > 0.0) {
    const double nm1 = static_cast<double>(n - 1);
    out.bound = M / (m * m * nm1 * nm1 * out.c_value);
  }
  return out;
}

double f_lambda(double lambda, std::size_t n, double m, double M) {
  check_order(n);
  check_scalars(m, M);
  check_lambda(lambda, n);
  const double nd = static_cast<double>(n);
  const double lead = lambda * M / (lambda * M + (nd - 1.0 - lambda) * m);
  const double trail = (lambda - 1.0) * m / ((lambda - 1.0) * m + (nd - lambda) * M);
  return lead - trail;
}

double g_lambda(double lambda, std::size_t n, double m, double M) {
  check_order(n);
  check_scalars(m, M);
  check_lambda(lambda, n);
  const double nd = static_cast<double>(n);
  const double num = (lambda - 1.0) * m;
  const double den = (lambda - 1.0) * m + (nd - lambda) * M;
  // num/den - num/(den + M) combined over a common denominator; the two
  // fractions approach each other as n grows and the difference cancels.
  return num * M / (den * (den + M));
}

double f_max_closed_form(std::size_t n, double m, double M) {
  check_order(n);
  check_scalars(m, M);
  const double nd = static_cast<double>(n);
  if (M == m) return 1.0 / (nd - 1.0);
  return (nd * M - (nd - 2.0) * m) / (nd * M + (nd - 2.0) * m);
}

double g_max_closed_form(std::size_t n, double m, double M) {
  check_order(n);
  check_scalars(m, M);
  const double k = static_cast<double>(n) - 2.0;
  return k * M * m / ((k * m + M) * (k * m + 2.0 * M));
}

double corollary_limit(double m, double M) {
  check_scalars(m, M);
  return 2.0 * m / (M + m);
}

}  // namespace ddinv
