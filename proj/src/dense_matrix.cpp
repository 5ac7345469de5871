#include "ddinv/dense_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ddinv/error.hpp"

namespace ddinv {

namespace {

void require_finite(std::span<const double> data, std::size_t n) {
  for (std::size_t k = 0; k < data.size(); ++k) {
    if (!std::isfinite(data[k])) {
      throw Error(ErrorKind::InvalidParams, ": non-finite entry at (" + std::to_string(k / n + 1) +
                                                "," + std::to_string(k % n + 1) + ")");
    }
  }
}

void require_same_order(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorKind::DimensionMismatch,
                ": " + std::to_string(a.order()) + " vs " + std::to_string(b.order()));
  }
}

}  // namespace

DenseMatrix::DenseMatrix(Index n, double value) : n_(n), data_(n * n, value) {
  require_finite(data_, n_);
}

DenseMatrix::DenseMatrix(Index n, std::vector<double> entries) : n_(n), data_(std::move(entries)) {
  if (data_.size() != n_ * n_) {
    throw Error(ErrorKind::DimensionMismatch, ": expected " + std::to_string(n_ * n_) +
                                                  " entries, got " + std::to_string(data_.size()));
  }
  require_finite(data_, n_);
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : n_(rows.size()) {
  data_.reserve(n_ * n_);
  Index i = 0;
  for (const auto& r : rows) {
    ++i;
    if (r.size() != n_) {
      throw Error(ErrorKind::RowLengthMismatch, "(" + std::to_string(i) + ")");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
  require_finite(data_, n_);
}

DenseMatrix DenseMatrix::identity(Index n) {
  DenseMatrix id(n);
  for (Index i = 0; i < n; ++i) id(i, i) = 1.0;
  return id;
}

double max_norm(const DenseMatrix& a) noexcept {
  double best = 0.0;
  for (double v : a.entries()) best = std::max(best, std::abs(v));
  return best;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_order(a, b);
  const auto n = a.order();
  DenseMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_order(a, b);
  DenseMatrix c = a;
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j) c(i, j) += b(i, j);
  return c;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_order(a, b);
  DenseMatrix c = a;
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j) c(i, j) -= b(i, j);
  return c;
}

std::vector<double> multiply(const DenseMatrix& a, std::span<const double> x) {
  if (x.size() != a.order()) {
    throw Error(ErrorKind::DimensionMismatch,
                ": matrix order " + std::to_string(a.order()) + ", vector length " +
                    std::to_string(x.size()));
  }
  std::vector<double> y(a.order(), 0.0);
  for (std::size_t i = 0; i < a.order(); ++i) {
    double acc = 0.0;
    const auto r = a.row(i);
    for (std::size_t j = 0; j < r.size(); ++j) acc += r[j] * x[j];
    y[i] = acc;
  }
  return y;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_order(a, b);
  double best = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) best = std::max(best, std::abs(ea[k] - eb[k]));
  return best;
}

double norm2(std::span<const double> x) noexcept {
  double acc = 0.0;
  for (double v : x) acc += v * v;
  return std::sqrt(acc);
}

double norm_inf(std::span<const double> x) noexcept {
  double best = 0.0;
  for (double v : x) best = std::max(best, std::abs(v));
  return best;
}

}  // namespace ddinv
