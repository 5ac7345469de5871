#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ddinv/dense_matrix.hpp"

namespace ddinv::detail {

/// Lower-triangular Cholesky factor, or nullopt if a pivot falls at or
/// below `pivot_floor`.
std::optional<DenseMatrix> cholesky(const DenseMatrix& a, double pivot_floor);

/// Solves L L^T x = b in place.
void cholesky_solve(const DenseMatrix& l, std::span<double> b);

struct LuFactors {
  DenseMatrix lu;  // unit-lower L below the diagonal, U on and above
  std::vector<std::size_t> perm;
};

/// Gaussian elimination with partial pivoting. nullopt if the largest
/// available pivot magnitude is at or below `pivot_floor`.
std::optional<LuFactors> lu_factor(const DenseMatrix& a, double pivot_floor);

void lu_solve(const LuFactors& f, std::span<double> b);

/// n * eps * max_i |a_{i,i}|.
double pivot_floor(const DenseMatrix& a) noexcept;

}  // namespace ddinv::detail
