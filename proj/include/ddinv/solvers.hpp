#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "ddinv/ddp_matrix.hpp"

namespace ddinv {

enum class SolveMethod { Jacobi, Cg, PcgDiag };

std::string_view to_string(SolveMethod method) noexcept;

struct SolveReport {
  SolveMethod method = SolveMethod::Jacobi;
  std::vector<double> solution;
  std::size_t iterations = 0;
  bool converged = false;
  /// ||b - Tx||_2 recomputed from scratch at x_0 = 0 and after every
  /// iteration, so its length is iterations + 1.
  std::vector<double> residual_history;

  double final_relative_residual(double b_norm) const {
    return residual_history.back() / b_norm;
  }
};

/// Stationary iteration x <- x + S(b - Tx) from x_0 = 0, stopping once
/// ||b - Tx||_2 <= tol ||b||_2 or after max_iter sweeps. Running out of
/// iterations is reported through `converged`, not thrown.
SolveReport jacobi_solve(const DdpMatrix& t, std::span<const double> b, double tol,
                         std::size_t max_iter);

/// Conjugate gradients from x_0 = 0, optionally preconditioned by the
/// diagonal approximate inverse. Requires symmetric positive definite T
/// (NotSymmetric / NotPositiveDefinite otherwise).
SolveReport pcg_solve(const DdpMatrix& t, std::span<const double> b, bool use_diag_precond,
                      double tol, std::size_t max_iter);

}  // namespace ddinv
