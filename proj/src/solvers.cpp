#include "ddinv/solvers.hpp"

#include <string>

#include "ddinv/approx_inverse.hpp"
#include "ddinv/error.hpp"

namespace ddinv {

std::string_view to_string(SolveMethod method) noexcept {
  switch (method) {
    case SolveMethod::Jacobi: return "jacobi";
    case SolveMethod::Cg: return "cg";
    case SolveMethod::PcgDiag: return "pcg-diag";
  }
  return "unknown";
}

namespace {

void check_inputs(const DdpMatrix& t, std::span<const double> b, double tol, std::size_t max_iter) {
  if (b.size() != t.order()) {
    throw Error(ErrorKind::DimensionMismatch, ": matrix order " + std::to_string(t.order()) +
                                                  ", right-hand side length " +
                                                  std::to_string(b.size()));
  }
  if (!(tol > 0.0) || max_iter < 1) {
    throw Error(ErrorKind::InvalidParams, ": need tol > 0 and max_iter >= 1");
  }
}

std::vector<double> residual(const DdpMatrix& t, std::span<const double> b,
                             std::span<const double> x) {
  std::vector<double> r = multiply(t.matrix(), x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = b[i] - r[i];
  return r;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

SolveReport jacobi_solve(const DdpMatrix& t, std::span<const double> b, double tol,
                         std::size_t max_iter) {
  check_inputs(t, b, tol, max_iter);
  const auto s = diag_approx(t);
  const double target = tol * norm2(b);

  SolveReport rep;
  rep.method = SolveMethod::Jacobi;
  rep.solution.assign(b.size(), 0.0);
  auto r = residual(t, b, rep.solution);
  rep.residual_history.push_back(norm2(r));
  rep.converged = rep.residual_history.back() <= target;

  while (!rep.converged && rep.iterations < max_iter) {
    const auto step = s.apply(r);
    for (std::size_t i = 0; i < step.size(); ++i) rep.solution[i] += step[i];
    ++rep.iterations;
    r = residual(t, b, rep.solution);
    rep.residual_history.push_back(norm2(r));
    rep.converged = rep.residual_history.back() <= target;
  }
  return rep;
}

SolveReport pcg_solve(const DdpMatrix& t, std::span<const double> b, bool use_diag_precond,
                      double tol, std::size_t max_iter) {
  check_inputs(t, b, tol, max_iter);
  if (!t.symmetric()) throw Error(ErrorKind::NotSymmetric, ": conjugate gradients");
  if (!is_positive_definite(t)) throw Error(ErrorKind::NotPositiveDefinite, ": conjugate gradients");

  const auto s = diag_approx(t);
  auto precondition = [&](std::span<const double> v) {
    return use_diag_precond ? s.apply(v) : std::vector<double>(v.begin(), v.end());
  };
  const double target = tol * norm2(b);
  const auto n = b.size();

  SolveReport rep;
  rep.method = use_diag_precond ? SolveMethod::PcgDiag : SolveMethod::Cg;
  rep.solution.assign(n, 0.0);
  auto& x = rep.solution;

  std::vector<double> r(b.begin(), b.end());
  rep.residual_history.push_back(norm2(r));
  rep.converged = rep.residual_history.back() <= target;

  auto z = precondition(r);
  auto p = z;
  double rz = dot(r, z);
  while (!rep.converged && rep.iterations < max_iter) {
    const auto tp = multiply(t.matrix(), p);
    const double alpha = rz / dot(p, tp);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] += alpha * p[i];
      r[i] -= alpha * tp[i];
    }
    ++rep.iterations;
    // History records the true residual; the recurrence keeps its own.
    rep.residual_history.push_back(norm2(residual(t, b, x)));
    rep.converged = rep.residual_history.back() <= target;
    if (rep.converged) break;

    z = precondition(r);
    const double rz_next = dot(r, z);
    const double beta = rz_next / rz;
    rz = rz_next;
    for (std::size_t i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
  }
  return rep;
}

}  // namespace ddinv
