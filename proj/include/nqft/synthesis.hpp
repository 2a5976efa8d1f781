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

// Matrix-level Fourier transform for a group G with cyclic normal subgroup
// N = <x> of index 2 and transversal (1, y):
//
//   B = (I_2 ⊗ A·P·M) · D · (DFT_2 ⊗ I_|N|) · C,   A = DFT_|N|
//
// P reorders the characters of N so that the extendable ones come first and
// each non-extendable rho_i is followed by its inner conjugate rho_i^y. D
// evaluates the summandwise extension of that ordered sum at y, and C makes
// the two copies of each induced 2-dim irreducible identical. Conjugating the
// regular representation of G by B yields a block-diagonal direct sum of
// irreducibles with equivalent blocks equal.

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "nqft/groups.hpp"
#include "nqft/linalg.hpp"

namespace nqft {

/// (degree, multiplicity) of each irreducible degree in the transform.
using IrrepCensus = std::vector<std::pair<std::size_t, std::size_t>>;

/// One summand of the reordered sum of characters of N.
struct OrderedSummand {
  std::uint64_t index;  // i of rho_i
  bool extendable;
};

/// Positions 0..2^n-1 of the reordered sum: target[p] is the character index
/// at position p. Extendables first, then adjacent pairs (i, i*r mod 2^n).
///
///  Dihedral, Quaternion: 0, 2^(n-1), then (k, 2^n-k) for k = 1..2^(n-1)-1.
///  QP: (j, j+2^(n-1)) for even j < 2^(n-1), then for odd j < 2^(n-1).
///  QD: 0, 2^(n-1), then (2k, 2^n-2k) for k = 1..2^(n-2)-1, then
///      (i, i*r) for i = 1 mod 4.
std::vector<std::uint64_t> reorder_target(const GroupSpec& g);

std::vector<OrderedSummand> ordered_summands(const GroupSpec& g);

/// perm_matrix(reorder_target(g)), so (A P)^-1 phi_N (A P) lists the
/// characters in target order.
ComplexMatrix reorder_permutation(const GroupSpec& g);

/// Identity: every character of a cyclic group has degree 1.
ComplexMatrix equalizing_conjugator(const GroupSpec& g);

/// Extension of rho_i to G for an extendable i: y maps to a square root of
/// rho_i(y^2), checked against the group relations.
Representation extend_character(const GroupSpec& g, std::uint64_t i);

/// rho_i induced along (1, y) for a non-extendable i.
Representation induce_character(const GroupSpec& g, std::uint64_t i);

/// I_{2^n} ⊕ rho_bar(y).
ComplexMatrix twiddle(const GroupSpec& g);

/// I_{2^n} ⊕ (1 on each extendable, diag(1,-1) on each induced pair).
ComplexMatrix equalizer(const GroupSpec& g);

struct DecompositionFactors {
  ComplexMatrix A;
  ComplexMatrix P;
  ComplexMatrix M;
  ComplexMatrix D;
  ComplexMatrix C;
};

struct DecompositionResult {
  GroupSpec group;
  ComplexMatrix B;
  DecompositionFactors factors;
  IrrepCensus irrep_census;
  std::set<std::uint64_t> extendables;
};

/// Recombines stored factors into B.
ComplexMatrix combine_factors(const GroupSpec& g, const DecompositionFactors& f);

/// Builds all factors and B. For Cyclic, B = A = DFT_{2^n} and the other
/// factors are identities.
DecompositionResult assemble(const GroupSpec& g);

}  // namespace nqft
