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


#include <doctest.h>

#include <variant>
#include <vector>

#include "nqft/circuit.hpp"
#include "nqft/circuit_library.hpp"
#include "nqft/linalg.hpp"
#include "nqft/synthesis.hpp"

using namespace nqft;

namespace {

constexpr Family kNonAbelian[] = {Family::Dihedral, Family::Quaternion, Family::QP, Family::QD};

ComplexMatrix shift_matrix(unsigned n) {
  const std::size_t m = std::size_t{1} << n;
  std::vector<std::size_t> sigma(m);
  for (std::size_t j = 0; j < m; ++j) sigma[j] = (j + 1) % m;
  return perm_matrix(sigma);
}

std::size_t basis_image(const Circuit& c, std::size_t b) {
  std::vector<Complex> v(std::size_t{1} << c.width(), 0.0);
  v[b] = 1;
  const auto out = apply_to_state(c, v);
  for (std::size_t i = 0; i < out.size(); ++i)
    if (std::abs(out[i] - 1.0) < 1e-12) return i;
  FAIL("not a basis permutation");
  return 0;
}

}  // namespace

TEST_CASE("cyclic QFT circuit") {
  const auto one = qft_cyclic_circuit(1);
  REQUIRE(one.size() == 1);
  CHECK(std::holds_alternative<Local>(one.gates()[0]));
  CHECK(max_abs_diff(to_matrix(one), dft(2)) < 1e-15);

  for (unsigned n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(max_abs_diff(to_matrix(qft_cyclic_circuit(n)), dft(std::size_t{1} << n)) < 1e-10);
  }
  CHECK(max_abs_diff(to_matrix(qft_cyclic_circuit(2)), dft(4)) < 1e-12);
  for (unsigned n = 2; n <= 8; ++n) CHECK(cost(qft_cyclic_circuit(n)) <= 4 * n * n);
}

TEST_CASE("increment circuit") {
  const auto one = increment_circuit(1);
  REQUIRE(one.size() == 1);
  CHECK(to_matrix(one) == to_matrix(Circuit(1).add(Local{gates::x(), 0})));

  const auto three = increment_circuit(3);
  CHECK(basis_image(three, 7) == 0);
  CHECK(basis_image(three, 3) == 4);

  for (unsigned n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(to_matrix(increment_circuit(n)) == shift_matrix(n));
  }
  for (unsigned n = 2; n <= 8; ++n) CHECK(cost(increment_circuit(n)) <= 2 * n * n);

  // n applications starting from 0 walk 1, 2, ..., n.
  const unsigned n = 5;
  const auto inc = increment_circuit(n);
  std::size_t state = 0;
  for (std::size_t step = 1; step <= n; ++step) {
    state = basis_image(inc, state);
    CHECK(state == step);
  }
}

TEST_CASE("reorder circuits realize the reorder permutation") {
  for (Family f : kNonAbelian) {
    for (unsigned n = 3; n <= 7; ++n) {
      CAPTURE(family_name(f));
      CAPTURE(n);
      const GroupSpec g(f, n);
      const auto c = reorder_circuit(g);
      CHECK(c.width() == n);
      CHECK(max_abs_diff(to_matrix(c), reorder_permutation(g)) < 1e-12);
    }
  }
  CHECK_THROWS_AS(reorder_circuit(GroupSpec(Family::Cyclic, 3)), std::invalid_argument);

  // Dihedral n = 3: position p holds character target[p].
  const std::size_t d3[] = {0, 4, 1, 7, 2, 6, 3, 5};
  const auto c = reorder_circuit(GroupSpec(Family::Dihedral, 3));
  for (std::size_t p = 0; p < 8; ++p) CHECK(basis_image(c, p) == d3[p]);

  // QP: constant cost. Dihedral and QD: quadratic, with cost/n^2 not
  // increasing once the full-width controls of n = 3 are past.
  const auto qp = cost(reorder_circuit(GroupSpec(Family::QP, 3)));
  for (Family f : {Family::Dihedral, Family::QD}) {
    double last_ratio = 1e9;
    for (unsigned n = 3; n <= 14; ++n) {
      const auto c = cost(reorder_circuit(GroupSpec(f, n)));
      CHECK(c <= 6 * n * n);
      const double ratio = double(c) / double(n * n);
      if (n >= 4) CHECK(ratio <= last_ratio);
      last_ratio = ratio;
    }
  }
  for (unsigned n = 3; n <= 14; ++n) CHECK(cost(reorder_circuit(GroupSpec(Family::QP, n))) == qp);
}

TEST_CASE("dihedral order circuit decimates the even indices") {
  for (unsigned m = 2; m <= 6; ++m) {
    const auto c = dihedral_order_circuit(m);
    const std::size_t half = std::size_t{1} << (m - 1);
    CHECK(basis_image(c, 0) == 0);
    CHECK(basis_image(c, 1) == half);
    for (std::size_t k = 1; k < half; ++k) {
      CHECK(basis_image(c, 2 * k) == k);
      CHECK(basis_image(c, 2 * k + 1) == 2 * half - k);
    }
  }
}

TEST_CASE("twiddle circuits") {
  for (Family f : kNonAbelian) {
    for (unsigned n = 3; n <= 7; ++n) {
      CAPTURE(family_name(f));
      CAPTURE(n);
      const GroupSpec g(f, n);
      const auto c = twiddle_circuit(g);
      CHECK(c.width() == n + 1);
      CHECK(max_abs_diff(to_matrix(c), twiddle(g)) < 1e-12);
      CHECK(cost(c) <= 2 * (n + 1) * (n + 1) + 2);
    }
  }
  for (unsigned n = 3; n <= 8; ++n) {
    const auto c = twiddle_circuit(GroupSpec(Family::QP, n));
    REQUIRE(c.size() == 1);
    const auto* g = std::get_if<MultiControlled>(&c.gates()[0]);
    REQUIRE(g != nullptr);
    CHECK(g->controls.size() == 2);
    CHECK(g->u == gates::x());
  }
}

TEST_CASE("equalizer circuits") {
  for (Family f : kNonAbelian) {
    for (unsigned n = 3; n <= 7; ++n) {
      CAPTURE(family_name(f));
      CAPTURE(n);
      const GroupSpec g(f, n);
      const auto m = to_matrix(equalizer_circuit(g));
      CHECK(max_abs_diff(m, equalizer(g)) < 1e-12);
      CHECK(max_abs_diff(m * m, ComplexMatrix::identity(g.order())) < 1e-12);
    }
  }
  // QP: the lambda_0 half and the extended summands are untouched.
  const GroupSpec qp(Family::QP, 4);
  const auto m = to_matrix(equalizer_circuit(qp));
  for (std::size_t p = 0; p < 16 + 8; ++p) CHECK(m(p, p) == Complex(1));
}

TEST_CASE("full QFT circuit equals the assembled transform") {
  for (unsigned n = 1; n <= 6; ++n) {
    const GroupSpec g(Family::Cyclic, n);
    const auto c = qft_circuit(g);
    CHECK(c.size() == qft_cyclic_circuit(n).size());
    CHECK(to_matrix(c) == to_matrix(qft_cyclic_circuit(n)));
  }
  for (Family f : kNonAbelian) {
    for (unsigned n = 3; n <= 5; ++n) {
      CAPTURE(family_name(f));
      CAPTURE(n);
      const GroupSpec g(f, n);
      const auto c = qft_circuit(g);
      CHECK(c.width() == n + 1);
      CHECK(max_abs_diff(to_matrix(c), assemble(g).B) < 1e-10);
      // P, D and C in temporal order C, D, P.
      const auto r = assemble(g);
      const auto pdc = kron(ComplexMatrix::identity(2), r.factors.P) * r.factors.D * r.factors.C;
      CHECK(max_abs_diff(to_matrix(structure_circuit(g)), pdc) < 1e-12);
    }
  }
}

TEST_CASE("QFT cost stays within a quadratic budget") {
  for (Family f : kNonAbelian) {
    for (unsigned n = 3; n <= 12; ++n) {
      const std::uint64_t w = n + 1;
      CHECK(cost(qft_circuit(GroupSpec(f, n))) <= 8 * w * w);
    }
  }
  const auto qp = cost(structure_circuit(GroupSpec(Family::QP, 3)));
  for (unsigned n = 4; n <= 16; ++n) CHECK(cost(structure_circuit(GroupSpec(Family::QP, n))) == qp);
}
