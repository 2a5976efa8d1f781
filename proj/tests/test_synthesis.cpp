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

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <vector>

#include "nqft/groups.hpp"
#include "nqft/linalg.hpp"
#include "nqft/synthesis.hpp"

using namespace nqft;

namespace {

constexpr Family kNonAbelian[] = {Family::Dihedral, Family::Quaternion, Family::QP, Family::QD};

ComplexMatrix swap2() { return ComplexMatrix{{0, 1}, {1, 0}}; }

ComplexMatrix diag(std::vector<Complex> d) { return ComplexMatrix::diagonal(d); }

Complex omega(const GroupSpec& g, std::uint64_t i) {
  return std::polar(1.0, 2 * std::numbers::pi * double(i) / double(g.cyclic_order()));
}

}  // namespace

TEST_CASE("reorder targets") {
  const std::vector<std::uint64_t> d3{0, 4, 1, 7, 2, 6, 3, 5};
  CHECK(reorder_target(GroupSpec(Family::Dihedral, 3)) == d3);
  CHECK(reorder_target(GroupSpec(Family::Quaternion, 3)) == d3);
  const std::vector<std::uint64_t> qp3{0, 4, 2, 6, 1, 5, 3, 7};
  CHECK(reorder_target(GroupSpec(Family::QP, 3)) == qp3);
  CHECK_THROWS_AS(reorder_target(GroupSpec(Family::Cyclic, 3)), std::invalid_argument);

  // Dihedral: position 2k holds k, position 2k+1 holds 2^n-k.
  for (unsigned n = 3; n <= 6; ++n) {
    const auto t = reorder_target(GroupSpec(Family::Dihedral, n));
    const std::uint64_t m = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < m / 2; ++k) {
      CHECK(t[2 * k] == k);
      CHECK(t[2 * k + 1] == m - k);
    }
  }
}

TEST_CASE("property: reorder targets put extendables first and conjugate pairs together") {
  for (Family f : kNonAbelian) {
    for (unsigned n = 3; n <= 8; ++n) {
      const GroupSpec g(f, n);
      const auto t = reorder_target(g);
      const auto ext = extendable_indices(g);
      REQUIRE(t.size() == g.cyclic_order());
      std::set<std::uint64_t> seen(t.begin(), t.end());
      CHECK(seen.size() == t.size());
      CHECK(*seen.rbegin() == g.cyclic_order() - 1);
      for (std::size_t p = 0; p < ext.size(); ++p) CHECK(ext.count(t[p]) == 1);
      for (std::size_t p = ext.size(); p < t.size(); p += 2) {
        CHECK(ext.count(t[p]) == 0);
        CHECK(conjugate_index(g, t[p]) == t[p + 1]);
      }
      const auto summands = ordered_summands(g);
      for (std::size_t p = 0; p < t.size(); ++p) {
        CHECK(summands[p].index == t[p]);
        CHECK(summands[p].extendable == (p < ext.size()));
      }
    }
  }
}

TEST_CASE("reorder permutation lists the characters in target order") {
  for (Family f : kNonAbelian) {
    for (unsigned n = 3; n <= 5; ++n) {
      const GroupSpec g(f, n);
      const GroupSpec cyc = g.cyclic_subgroup();
      const auto ap = dft(g.cyclic_order()) * reorder_permutation(g);
      const auto conj = ap.adjoint() * regular_representation(cyc, generator_x()) * ap;
      std::vector<Complex> want;
      for (auto i : reorder_target(g)) want.push_back(omega(g, i));
      CHECK(max_abs_diff(conj, diag(want)) < 1e-12);
    }
  }
}

TEST_CASE("equalizing conjugator is the identity") {
  CHECK(equalizing_conjugator(GroupSpec(Family::Dihedral, 3)) == ComplexMatrix::identity(8));
  CHECK(equalizing_conjugator(GroupSpec(Family::QP, 4)) == ComplexMatrix::identity(16));
  CHECK(equalizing_conjugator(GroupSpec(Family::QD, 3)) == ComplexMatrix::identity(8));
}

TEST_CASE("twiddle matrices") {
  const auto i8 = ComplexMatrix::identity(8);
  const auto one = ComplexMatrix::identity(1);
  CHECK(twiddle(GroupSpec(Family::Dihedral, 3)) ==
        direct_sum({i8, one, one, swap2(), swap2(), swap2()}));

  // Pairs (1,7), (2,6), (3,5): y^2 = x^4 acts as (-1)^i.
  const ComplexMatrix odd{{0, 1}, {-1, 0}};
  CHECK(twiddle(GroupSpec(Family::Quaternion, 3)) ==
        direct_sum({i8, one, one, odd, swap2(), odd}));

  CHECK(twiddle(GroupSpec(Family::QP, 3)) ==
        direct_sum({i8, ComplexMatrix::identity(4), swap2(), swap2()}));

  for (Family f : kNonAbelian) {
    for (unsigned n = 3; n <= 6; ++n) CHECK(is_unitary(twiddle(GroupSpec(f, n))));
  }
}

TEST_CASE("extended and induced characters satisfy the relations") {
  for (Family f : kNonAbelian) {
    for (unsigned n = 3; n <= 6; ++n) {
      const GroupSpec g(f, n);
      const auto ext = extendable_indices(g);
      for (std::uint64_t i = 0; i < g.cyclic_order(); ++i) {
        if (ext.count(i)) {
          const auto rho = extend_character(g, i);
          CHECK(rho.relation_defect() < 1e-12);
          CHECK(std::abs(rho.x_image()(0, 0) - omega(g, i)) < 1e-12);
          CHECK_THROWS_AS(induce_character(g, i), std::invalid_argument);
        } else {
          CHECK(induce_character(g, i).relation_defect() < 1e-12);
          CHECK_THROWS_AS(extend_character(g, i), std::invalid_argument);
        }
      }
    }
  }
}

TEST_CASE("equalizer matrices") {
  const auto i8 = ComplexMatrix::identity(8);
  CHECK(equalizer(GroupSpec(Family::Dihedral, 3)) ==
        direct_sum({i8, diag({1, 1, 1, -1, 1, -1, 1, -1})}));
  CHECK(equalizer(GroupSpec(Family::QP, 3)) == direct_sum({i8, diag({1, 1, 1, 1, 1, -1, 1, -1})}));
  for (Family f : kNonAbelian) {
    for (unsigned n = 3; n <= 6; ++n) {
      const GroupSpec g(f, n);
      const auto c = equalizer(g);
      CHECK(c * c == ComplexMatrix::identity(g.order()));
      const auto ext = extendable_indices(g).size();
      for (std::size_t p = 0; p < g.cyclic_order() + ext; ++p) CHECK(c(p, p) == Complex(1));
    }
  }
}

TEST_CASE("assemble: cyclic case is the DFT") {
  for (unsigned n = 1; n <= 6; ++n) {
    const auto r = assemble(GroupSpec(Family::Cyclic, n));
    CHECK(r.B == dft(std::size_t{1} << n));
    REQUIRE(r.irrep_census.size() == 1);
    CHECK(r.irrep_census[0] == std::pair<std::size_t, std::size_t>{1, std::size_t{1} << n});
  }
}

TEST_CASE("assemble: factors, census and invariants") {
  for (Family f : kNonAbelian) {
    for (unsigned n = 3; n <= 5; ++n) {
      CAPTURE(family_name(f));
      CAPTURE(n);
      const GroupSpec g(f, n);
      const auto r = assemble(g);
      CHECK(r.B.rows() == g.order());
      CHECK(unitarity_defect(r.B) < 1e-10);
      for (const auto* m : {&r.factors.A, &r.factors.P, &r.factors.M, &r.factors.D, &r.factors.C}) {
        CHECK(unitarity_defect(*m) < 1e-10);
      }
      CHECK(max_abs_diff(combine_factors(g, r.factors), r.B) < 1e-14);

      // Independent expansion of the product formula.
      const auto i2 = ComplexMatrix::identity(2);
      const auto explicit_b =
          kron(i2, dft(g.cyclic_order()) * r.factors.P * r.factors.M) * r.factors.D *
          kron(dft(2), ComplexMatrix::identity(g.cyclic_order())) * r.factors.C;
      CHECK(max_abs_diff(explicit_b, r.B) < 1e-12);

      const auto ext = extendable_indices(g);
      CHECK(r.extendables == ext);
      std::size_t dim = 0;
      for (auto [d, m] : r.irrep_census) dim += d * d * m;
      CHECK(dim == g.order());
      const std::size_t pairs = (g.cyclic_order() - ext.size()) / 2;
      REQUIRE(r.irrep_census.size() == 2);
      CHECK(r.irrep_census[0] == std::pair<std::size_t, std::size_t>{1, 2 * ext.size()});
      CHECK(r.irrep_census[1] == std::pair<std::size_t, std::size_t>{2, pairs});
    }
  }
  CHECK_THROWS_AS(assemble(GroupSpec(Family::Dihedral, 13)), std::invalid_argument);
}

TEST_CASE("quaternion and dihedral transforms differ only in the twiddle factor") {
  for (unsigned n = 3; n <= 5; ++n) {
    const auto d = assemble(GroupSpec(Family::Dihedral, n)).factors;
    const auto q = assemble(GroupSpec(Family::Quaternion, n)).factors;
    CHECK(d.A == q.A);
    CHECK(d.P == q.P);
    CHECK(d.M == q.M);
    CHECK(d.C == q.C);
    CHECK_FALSE(d.D == q.D);
  }
}

// phi(x)^B and phi(y)^B written out from the census: in each half, the
// extended characters then the induced 2x2 blocks; the second half carries
// the sign character on the extended summands.
TEST_CASE("conjugated regular representation has the predicted closed form") {
  for (Family f : kNonAbelian) {
    for (unsigned n = 3; n <= 5; ++n) {
      CAPTURE(family_name(f));
      CAPTURE(n);
      const GroupSpec g(f, n);
      const auto b = assemble(g).B;
      const auto t = reorder_target(g);
      const auto ext = extendable_indices(g).size();
      const std::uint64_t half = g.cyclic_order() / 2;

      std::vector<ComplexMatrix> xs, ys;
      for (int lambda = 0; lambda < 2; ++lambda) {
        for (std::size_t p = 0; p < ext; ++p) {
          xs.push_back(ComplexMatrix{{omega(g, t[p])}});
          ys.push_back(ComplexMatrix{{lambda ? -1.0 : 1.0}});
        }
        for (std::size_t p = ext; p < t.size(); p += 2) {
          xs.push_back(diag({omega(g, t[p]), omega(g, t[p + 1])}));
          // y^2 = x^(2^(n-1)) in the quaternion group, 1 otherwise.
          const Complex c = f == Family::Quaternion ? omega(g, t[p] * half) : 1.0;
          ys.push_back(ComplexMatrix{{0, 1}, {c, 0}});
        }
      }
      const auto bi = b.adjoint();
      CHECK(max_abs_diff(bi * regular_representation(g, generator_x()) * b, direct_sum(xs)) <
            1e-12);
      CHECK(max_abs_diff(bi * regular_representation(g, generator_y()) * b, direct_sum(ys)) <
            1e-12);
    }
  }
}
