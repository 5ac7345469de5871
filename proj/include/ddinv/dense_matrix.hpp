#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace ddinv {

/// Square, dense, row-major matrix of doubles. Construction rejects
/// non-square shapes and non-finite entries, so every instance is a valid
/// n x n array of finite values.
class DenseMatrix {
 public:
  using Index = std::size_t;

  DenseMatrix() = default;

  /// n x n matrix filled with `value`.
  explicit DenseMatrix(Index n, double value = 0.0);

  /// Takes ownership of `entries` (row-major, length n*n).
  DenseMatrix(Index n, std::vector<double> entries);

  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static DenseMatrix identity(Index n);

  Index order() const noexcept { return n_; }

  double operator()(Index i, Index j) const noexcept { return data_[i * n_ + j]; }
  double& operator()(Index i, Index j) noexcept { return data_[i * n_ + j]; }

  std::span<const double> row(Index i) const noexcept { return {data_.data() + i * n_, n_}; }
  std::span<const double> entries() const noexcept { return data_; }

  bool operator==(const DenseMatrix&) const = default;

 private:
  Index n_ = 0;
  std::vector<double> data_;
};

/// Entrywise maximum norm max_{i,j} |a_{i,j}|. This is not the induced
/// infinity norm.
double max_norm(const DenseMatrix& a) noexcept;

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);

std::vector<double> multiply(const DenseMatrix& a, std::span<const double> x);

/// max_{i,j} |a_{i,j} - b_{i,j}|.
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

double norm2(std::span<const double> x) noexcept;
double norm_inf(std::span<const double> x) noexcept;

}  // namespace ddinv
