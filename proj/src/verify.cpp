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

#include "nqft/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nqft/circuit_library.hpp"

namespace nqft {

namespace {

constexpr double kCommutatorFloor = 1e-6;
constexpr double kCharacterTol = 1e-8;
constexpr double kBlockThreshold = 1e-8;

Census layout_census(const GroupSpec& g) {
  if (g.is_abelian()) return {{1, g.order()}};
  return census(g);
}

std::size_t count_of_degree(const Census& c, std::size_t degree) {
  for (const auto& [d, k] : c)
    if (d == degree) return k;
  return 0;
}

struct Block {
  std::size_t offset;
  std::size_t size;
};

std::vector<Block> to_blocks(std::span<const std::size_t> sizes) {
  std::vector<Block> out;
  std::size_t offset = 0;
  for (std::size_t s : sizes) {
    out.push_back({offset, s});
    offset += s;
  }
  return out;
}

// Diagonal block of B^dagger phi(g) B for every block, using the right
// multiplication table instead of dense products.
std::vector<ComplexMatrix> conjugated_blocks(const ComplexMatrix& b,
                                             std::span<const std::size_t> right_mult,
                                             std::span<const Block> blocks) {
  std::vector<ComplexMatrix> out;
  const std::size_t dim = b.rows();
  for (const auto& blk : blocks) {
    ComplexMatrix m(blk.size, blk.size);
    for (std::size_t r = 0; r < blk.size; ++r)
      for (std::size_t c = 0; c < blk.size; ++c) {
        Complex acc{};
        for (std::size_t h = 0; h < dim; ++h)
          acc += std::conj(b(h, blk.offset + r)) * b(right_mult[h], blk.offset + c);
        m(r, c) = acc;
      }
    out.push_back(std::move(m));
  }
  return out;
}

Complex trace(const ComplexMatrix& m) {
  Complex t{};
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

}  // namespace

Census census(const GroupSpec& g) {
  if (g.is_abelian()) throw std::invalid_argument("census: abelian group");
  const std::uint64_t m = g.cyclic_order();
  if (g.family() == Family::QP) return {{1, m}, {2, m / 4}};
  return {{1, 4}, {2, m / 2 - 1}};
}

std::uint64_t census_dimension(const Census& c) {
  std::uint64_t total = 0;
  for (const auto& [d, k] : c) total += k * d * d;
  return total;
}

bool VerificationReport::passed(Tolerance tol) const {
  const double eps = tol.eps_entry;
  if (unitarity_defect >= eps || max_offblock >= eps || equal_summands_defect >= eps) {
    return false;
  }
  if (circuit_matrix_defect && *circuit_matrix_defect >= eps) return false;
  return census_ok && irreducible_ok;
}

std::vector<std::size_t> expected_block_sizes(const GroupSpec& g) {
  const Census c = layout_census(g);
  if (g.is_abelian()) return std::vector<std::size_t>(g.order(), 1);
  // Each half holds one copy of every 2-dim irreducible and half of the
  // 1-dim characters.
  std::vector<std::size_t> half(count_of_degree(c, 1) / 2, 1);
  half.insert(half.end(), count_of_degree(c, 2), 2);
  std::vector<std::size_t> out = half;
  out.insert(out.end(), half.begin(), half.end());
  return out;
}

std::vector<std::size_t> observed_block_sizes(std::span<const ComplexMatrix> matrices,
                                              double threshold) {
  if (matrices.empty()) throw std::invalid_argument("observed_block_sizes: no matrices");
  const std::size_t dim = matrices.front().rows();
  // reach[i]: furthest index coupled to i through a non-negligible entry.
  std::vector<std::size_t> reach(dim);
  for (std::size_t i = 0; i < dim; ++i) reach[i] = i;
  for (const auto& m : matrices) {
    if (m.rows() != dim || m.cols() != dim) {
      throw std::invalid_argument("observed_block_sizes: size mismatch");
    }
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        if (std::abs(m(i, j)) > threshold) {
          reach[i] = std::max(reach[i], j);
          reach[j] = std::max(reach[j], i);
        }
  }
  std::vector<std::size_t> sizes;
  std::size_t start = 0, end = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    end = std::max(end, reach[i]);
    if (end == i) {
      sizes.push_back(i + 1 - start);
      start = i + 1;
    }
  }
  return sizes;
}

VerificationReport check_decomposition(const ComplexMatrix& b, const GroupSpec& g) {
  if (!b.is_square() || b.rows() != g.order()) {
    throw std::invalid_argument("check_decomposition: B must be |G| x |G|");
  }
  VerificationReport report(g);
  report.unitarity_defect = unitarity_defect(b);

  // B^dagger stands in for B^-1; a non-unitary B already fails above.
  const ComplexMatrix b_adj = b.adjoint();
  std::vector<ComplexMatrix> generators;
  generators.push_back(b_adj * regular_representation(g, generator_x()) * b);
  if (!g.is_abelian()) generators.push_back(b_adj * regular_representation(g, generator_y()) * b);

  const auto sizes = expected_block_sizes(g);
  const auto blocks = to_blocks(sizes);
  std::vector<std::size_t> block_of(g.order());
  for (std::size_t k = 0; k < blocks.size(); ++k)
    for (std::size_t i = 0; i < blocks[k].size; ++i) block_of[blocks[k].offset + i] = k;
  for (const auto& m : generators)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (block_of[i] != block_of[j]) {
          report.max_offblock = std::max(report.max_offblock, std::abs(m(i, j)));
        }

  // Each 2-dim block in the first half has an identical twin in the second.
  const std::size_t half = blocks.size() / 2;
  if (!g.is_abelian()) {
    for (std::size_t k = 0; k < half; ++k) {
      if (blocks[k].size != 2) continue;
      const Block& twin = blocks[k + half];
      for (const auto& m : generators) {
        const auto a = m.block(blocks[k].offset, blocks[k].offset, 2, 2);
        const auto c = m.block(twin.offset, twin.offset, 2, 2);
        report.equal_summands_defect = std::max(report.equal_summands_defect, max_abs_diff(a, c));
      }
    }
  }

  // Irreducibility: degree-2 blocks must not commute; degree-1 blocks must
  // be characters.
  report.irreducible_ok = true;
  for (const auto& blk : blocks) {
    std::vector<ComplexMatrix> images;
    for (const auto& m : generators) images.push_back(m.block(blk.offset, blk.offset, blk.size, blk.size));
    if (blk.size == 2) {
      if (images.size() < 2) {
        report.irreducible_ok = false;
        continue;
      }
      const double comm = max_abs_diff(images[0] * images[1], images[1] * images[0]);
      if (comm <= kCommutatorFloor) report.irreducible_ok = false;
    } else {
      for (const auto& im : images)
        if (std::abs(std::abs(im(0, 0)) - 1.0) > kCharacterTol) report.irreducible_ok = false;
      const Representation chi = images.size() == 2 ? Representation(g, images[0], images[1])
                                                    : Representation(g, images[0]);
      if (chi.relation_defect() > kCharacterTol) report.irreducible_ok = false;
    }
  }

  // Census: the observed partition matches, and the characters of one copy
  // of each irreducible are orthonormal over the whole group.
  const Census c = layout_census(g);
  const auto observed = observed_block_sizes(generators, kBlockThreshold);
  bool census_ok = observed == sizes && census_dimension(c) == g.order();
  std::vector<Block> distinct;
  for (std::size_t k = 0; k < blocks.size(); ++k)
    if (blocks[k].size == 1 || k < half) distinct.push_back(blocks[k]);
  std::size_t ones = 0, twos = 0;
  for (const auto& blk : distinct) (blk.size == 1 ? ones : twos)++;
  census_ok = census_ok && ones == count_of_degree(c, 1) && twos == count_of_degree(c, 2);

  const auto elements = all_elements(g);
  std::vector<std::vector<Complex>> characters(distinct.size());
  std::vector<std::size_t> right_mult(elements.size());
  for (const auto& e : elements) {
    for (std::size_t h = 0; h < elements.size(); ++h)
      right_mult[h] = element_index(g, multiply(g, elements[h], e));
    const auto images = conjugated_blocks(b, right_mult, distinct);
    for (std::size_t k = 0; k < distinct.size(); ++k) characters[k].push_back(trace(images[k]));
  }
  for (std::size_t a = 0; a < distinct.size() && census_ok; ++a)
    for (std::size_t bb = 0; bb < distinct.size(); ++bb) {
      Complex ip{};
      for (std::size_t e = 0; e < elements.size(); ++e)
        ip += characters[a][e] * std::conj(characters[bb][e]);
      ip /= static_cast<double>(elements.size());
      const Complex expected = a == bb ? 1.0 : 0.0;
      if (std::abs(ip - expected) > kCharacterTol) census_ok = false;
    }
  report.census_ok = census_ok;
  return report;
}

double circuit_matches(const Circuit& c, const ComplexMatrix& b) {
  if (b.rows() != (std::size_t{1} << c.width()) || !b.is_square()) {
    throw std::invalid_argument("circuit_matches: dimension mismatch");
  }
  return max_abs_diff(to_matrix(c), b);
}

double scaling_fit(std::span<const CostPoint> points) {
  if (points.size() < 4) throw std::invalid_argument("scaling_fit: need at least four points");
  double mx = 0, my = 0;
  for (const auto& p : points) {
    mx += std::log(static_cast<double>(p.width));
    my += std::log(static_cast<double>(p.cost));
  }
  mx /= static_cast<double>(points.size());
  my /= static_cast<double>(points.size());
  double sxy = 0, sxx = 0;
  for (const auto& p : points) {
    const double dx = std::log(static_cast<double>(p.width)) - mx;
    sxy += dx * (std::log(static_cast<double>(p.cost)) - my);
    sxx += dx * dx;
  }
  if (sxx == 0) throw std::invalid_argument("scaling_fit: widths must differ");
  return sxy / sxx;
}

std::vector<CostPoint> qft_costs(Family f, std::span<const unsigned> ns) {
  std::vector<CostPoint> out;
  for (unsigned n : ns) {
    const GroupSpec g(f, n);
    out.push_back({n, g.qubits(), cost(qft_circuit(g))});
  }
  return out;
}

std::vector<CostPoint> structure_costs(Family f, std::span<const unsigned> ns) {
  std::vector<CostPoint> out;
  for (unsigned n : ns) {
    const GroupSpec g(f, n);
    out.push_back({n, g.qubits(), cost(structure_circuit(g))});
  }
  return out;
}

double scaling_fit(Family f, std::span<const unsigned> ns) {
  return scaling_fit(qft_costs(f, ns));
}

}  // namespace nqft
