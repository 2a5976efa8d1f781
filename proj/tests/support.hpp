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

// Hand-rolled generators for the property tests. Every suite seeds its own
// engine so failures reproduce.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "nqft/circuit.hpp"
#include "nqft/linalg.hpp"

namespace nqft::testing {

using Rng = std::mt19937_64;

inline Complex random_complex(Rng& rng) {
  std::normal_distribution<double> d;
  return {d(rng), d(rng)};
}

inline ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_complex(rng);
  }
  return m;
}

// Gram-Schmidt on the columns of a Gaussian matrix.
inline ComplexMatrix random_unitary(Rng& rng, std::size_t n) {
  ComplexMatrix m = random_matrix(rng, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      Complex dot = 0;
      for (std::size_t i = 0; i < n; ++i) dot += std::conj(m(i, k)) * m(i, j);
      for (std::size_t i = 0; i < n; ++i) m(i, j) -= dot * m(i, k);
    }
    double norm = 0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(m(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) m(i, j) /= norm;
  }
  return m;
}

inline std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline std::vector<Complex> random_state(Rng& rng, std::size_t dim) {
  std::vector<Complex> v(dim);
  double norm = 0;
  for (auto& z : v) {
    z = random_complex(rng);
    norm += std::norm(z);
  }
  for (auto& z : v) z /= std::sqrt(norm);
  return v;
}

inline Gate random_gate(Rng& rng, std::size_t width) {
  std::uniform_int_distribution<int> kind(0, 3);
  const auto qubits = random_permutation(rng, width);
  switch (width >= 2 ? kind(rng) : 0) {
    case 0:
      return Local{random_unitary(rng, 2), qubits[0]};
    case 1:
      return CNot{qubits[0], qubits[1]};
    case 2: {
      std::uniform_int_distribution<std::size_t> nctl(1, width - 1);
      std::bernoulli_distribution negative(0.3);
      std::vector<Control> controls;
      const std::size_t k = nctl(rng);
      for (std::size_t i = 1; i <= k; ++i) {
        controls.push_back({qubits[i], negative(rng) ? Polarity::Negative : Polarity::Positive});
      }
      return MultiControlled{random_unitary(rng, 2), std::move(controls), qubits[0]};
    }
    default:
      return QubitPerm{qubits};
  }
}

inline Circuit random_circuit(Rng& rng, std::size_t width, std::size_t gates) {
  Circuit c(width);
  for (std::size_t i = 0; i < gates; ++i) c.add(random_gate(rng, width));
  return c;
}

}  // namespace nqft::testing
