// Copyright 2026 The nqft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nqft/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace nqft {

namespace {

void check_finite(std::span<const Complex> entries) {
  for (const Complex& z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("ComplexMatrix: non-finite entry");
    }
  }
}

void check_shape(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("ComplexMatrix: dimensions must be at least 1");
  }
}

std::string shape(const ComplexMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Tolerance::Tolerance(double eps) : eps_entry(eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw std::invalid_argument("Tolerance: eps_entry must be positive");
  }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols) {
  check_shape(rows, cols);
  data_.assign(rows * cols, Complex{0.0, 0.0});
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  check_shape(rows, cols);
  if (data_.size() != rows * cols) {
    throw std::invalid_argument("ComplexMatrix: entry count does not match shape");
  }
  check_finite(data_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  check_shape(rows_, cols_);
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw std::invalid_argument("ComplexMatrix: ragged initializer");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
  check_finite(data_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  check_finite(m.data_);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

ComplexMatrix ComplexMatrix::block(std::size_t row, std::size_t col,
                                   std::size_t rows, std::size_t cols) const {
  if (row + rows > rows_ || col + cols > cols_) {
    throw std::out_of_range("ComplexMatrix::block: out of range");
  }
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = (*this)(row + r, col + c);
  return m;
}

bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matmul: dimension mismatch " + shape(a) + " * " +
                                shape(b));
  }
  // Entries are finite, so the product is written out in real arithmetic;
  // std::complex's operator* goes through the inf/nan-recovering libcall.
  const std::size_t n = b.cols();
  std::vector<Complex> out(a.rows() * n);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex* row = out.data() + i * n;
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      const double ar = aik.real(), ai = aik.imag();
      const Complex* brow = &b(k, 0);
      for (std::size_t j = 0; j < n; ++j) {
        const double br = brow[j].real(), bi = brow[j].imag();
        row[j] = Complex(row[j].real() + ar * br - ai * bi, row[j].imag() + ar * bi + ai * br);
      }
    }
  }
  return ComplexMatrix(a.rows(), n, std::move(out));
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matmul(a, b);
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  std::vector<Complex> d(a.data().begin(), a.data().end());
  for (Complex& z : d) z *= s;
  return ComplexMatrix(a.rows(), a.cols(), std::move(d));
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("operator-: dimension mismatch");
  }
  std::vector<Complex> d(a.data().begin(), a.data().end());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= b.data()[i];
  return ComplexMatrix(a.rows(), a.cols(), std::move(d));
}

std::vector<Complex> apply(const ComplexMatrix& a, std::span<const Complex> v) {
  if (a.cols() != v.size()) throw std::invalid_argument("apply: dimension mismatch");
  std::vector<Complex> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex acc{};
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix direct_sum(std::span<const ComplexMatrix> blocks) {
  if (blocks.empty()) throw std::invalid_argument("direct_sum: empty block list");
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  ComplexMatrix out(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(r0 + r, c0 + c) = b(r, c);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

ComplexMatrix direct_sum(std::initializer_list<ComplexMatrix> blocks) {
  return direct_sum(std::span<const ComplexMatrix>(blocks.begin(), blocks.size()));
}

Complex root_of_unity(std::size_t n, long long k) {
  if (n == 0) throw std::invalid_argument("root_of_unity: n = 0");
  const long long m = static_cast<long long>(n);
  const long long r = ((k % m) + m) % m;
  // Reduce first so the angle stays in [0, 2pi); exact values for the
  // quarter turns keep 0/±1/±i free of rounding noise.
  if ((4 * r) % m == 0) {
    switch ((4 * r) / m) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) /
                       static_cast<double>(n);
  return std::polar(1.0, angle);
}

ComplexMatrix dft(std::size_t n) {
  if (n == 0) throw std::invalid_argument("dft: n must be at least 1");
  ComplexMatrix m(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = scale * root_of_unity(n, static_cast<long long>((i * j) % n));
  return m;
}

bool is_permutation(std::span<const std::size_t> sigma) {
  std::vector<bool> seen(sigma.size(), false);
  for (std::size_t s : sigma) {
    if (s >= sigma.size() || seen[s]) return false;
    seen[s] = true;
  }
  return true;
}

ComplexMatrix perm_matrix(std::span<const std::size_t> sigma) {
  if (sigma.empty() || !is_permutation(sigma)) {
    throw std::invalid_argument("perm_matrix: input is not a bijection");
  }
  ComplexMatrix m(sigma.size(), sigma.size());
  for (std::size_t j = 0; j < sigma.size(); ++j) m(sigma[j], j) = 1.0;
  return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: dimension mismatch " + shape(a) +
                                " vs " + shape(b));
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, Tolerance tol) {
  return max_abs_diff(a, b) <= tol.eps_entry;
}

double unitarity_defect(const ComplexMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("unitarity check on non-square matrix");
  return max_abs_diff(a.adjoint() * a, ComplexMatrix::identity(a.rows()));
}

bool is_unitary(const ComplexMatrix& a, Tolerance tol) {
  return unitarity_defect(a) <= tol.eps_entry;
}

}  // namespace nqft
