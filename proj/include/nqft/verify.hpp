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

// Independent checks of a claimed Fourier transform. The regular
// representation is rebuilt here from group multiplication alone, and the
// expected block layout comes from the irreducible census, so nothing below
// depends on how a transform was synthesized.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nqft/circuit.hpp"
#include "nqft/groups.hpp"
#include "nqft/linalg.hpp"

namespace nqft {

/// (degree, number of distinct irreducibles of that degree).
using Census = std::vector<std::pair<std::size_t, std::size_t>>;

/// D/Q/QD: 4 one-dim, 2^(n-1)-1 two-dim. QP: 2^n one-dim, 2^(n-2) two-dim.
/// Throws for Cyclic.
Census census(const GroupSpec& g);

/// Sum over the census of count * degree^2.
std::uint64_t census_dimension(const Census& c);

struct CostPoint {
  unsigned n;
  unsigned width;  // qubits, log2 |G|
  std::uint64_t cost;
};

struct VerificationReport {
  explicit VerificationReport(GroupSpec g) : group(g) {}

  GroupSpec group;
  double unitarity_defect = 0.0;
  /// Largest entry of B^-1 phi(g) B outside the predicted blocks, g in {x, y}.
  double max_offblock = 0.0;
  /// Observed block sizes and character orthogonality agree with the census.
  bool census_ok = false;
  /// Largest difference between blocks that must be equal.
  double equal_summands_defect = 0.0;
  /// Every 2-dim block has non-commuting generator images and every 1-dim
  /// block is a character (unit modulus, group relations hold).
  bool irreducible_ok = false;
  std::optional<double> circuit_matrix_defect;
  std::vector<CostPoint> cost_by_n;

  /// All defects below tol.eps_entry and both flags set.
  bool passed(Tolerance tol = {}) const;
};

/// Block sizes along the diagonal in the expected output layout: for
/// non-abelian G, each half lists the 1-dim blocks then the 2-dim blocks;
/// for Cyclic, all blocks are 1-dim.
std::vector<std::size_t> expected_block_sizes(const GroupSpec& g);

/// Sizes of the finest block-diagonal partition (contiguous) containing all
/// entries above `threshold` in every matrix.
std::vector<std::size_t> observed_block_sizes(std::span<const ComplexMatrix> matrices,
                                              double threshold);

/// Conjugates the regular representation by B and checks block structure,
/// equal equivalent summands, irreducibility and inequivalence.
VerificationReport check_decomposition(const ComplexMatrix& b, const GroupSpec& g);

/// max |to_matrix(c) - b|.
double circuit_matches(const Circuit& c, const ComplexMatrix& b);

/// Least-squares slope of log(cost) against log(width). Throws with fewer
/// than four points.
double scaling_fit(std::span<const CostPoint> points);

/// qft_circuit cost under the default model for each n.
std::vector<CostPoint> qft_costs(Family f, std::span<const unsigned> ns);

/// Cost of the P, D and C circuits inside qft_circuit for each n.
std::vector<CostPoint> structure_costs(Family f, std::span<const unsigned> ns);

/// scaling_fit(qft_costs(f, ns)).
double scaling_fit(Family f, std::span<const unsigned> ns);

}  // namespace nqft
