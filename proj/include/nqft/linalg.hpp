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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace nqft {

using Complex = std::complex<double>;

/// Maximum absolute entrywise deviation accepted when comparing matrices.
struct Tolerance {
  double eps_entry = 1e-10;

  constexpr Tolerance() = default;
  explicit Tolerance(double eps);
};

/// Dense complex matrix, row-major.
///
/// Always at least 1x1 and never holds NaN or Inf; both are checked on
/// construction from raw data.
class ComplexMatrix {
 public:
  /// Zero matrix.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Complex> data() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;

  /// Copy of the block starting at (row, col).
  ComplexMatrix block(std::size_t row, std::size_t col, std::size_t rows,
                      std::size_t cols) const;

  /// Exact entrywise equality.
  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);

/// Matrix-vector product.
std::vector<Complex> apply(const ComplexMatrix& a, std::span<const Complex> v);

/// Kronecker product: (a⊗b)[i*b.rows+k, j*b.cols+l] = a[i,j]*b[k,l].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Block-diagonal matrix; off-block entries are exactly zero.
ComplexMatrix direct_sum(std::span<const ComplexMatrix> blocks);
ComplexMatrix direct_sum(std::initializer_list<ComplexMatrix> blocks);

/// exp(2*pi*i*k/n).
Complex root_of_unity(std::size_t n, long long k);

/// Unitary DFT: (1/sqrt(n)) [w^(i*j)] with w = exp(+2*pi*i/n).
ComplexMatrix dft(std::size_t n);

/// Permutation matrix with P[sigma[j], j] = 1, i.e. P e_j = e_{sigma(j)}.
///
/// This is the one place the row/column convention is fixed; everything
/// else in the library goes through it. With it,
/// perm_matrix(sigma o tau) = perm_matrix(sigma) * perm_matrix(tau).
ComplexMatrix perm_matrix(std::span<const std::size_t> sigma);

/// True iff sigma is a bijection of {0..sigma.size()-1}.
bool is_permutation(std::span<const std::size_t> sigma);

/// max |a - b| over all entries. Dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                  Tolerance tol = {});

/// max |a^dagger a - I|. Throws for non-square input.
double unitarity_defect(const ComplexMatrix& a);

bool is_unitary(const ComplexMatrix& a, Tolerance tol = {});

}  // namespace nqft
