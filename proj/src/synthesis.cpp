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

#include "nqft/synthesis.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace nqft {

namespace {

// Matrix-level synthesis works with dense 2^(n+1) square matrices.
constexpr unsigned kMaxMatrixExponent = 12;

void require_nonabelian(const GroupSpec& g, const char* what) {
  if (g.is_abelian()) {
    throw std::invalid_argument(std::string(what) + ": requires a non-abelian family");
  }
}

void require_matrix_size(const GroupSpec& g, const char* what) {
  if (g.n() > kMaxMatrixExponent) {
    throw std::invalid_argument(std::string(what) + ": n too large for dense matrices");
  }
}

std::array<GroupElement, 2> transversal() { return {identity_element(), generator_y()}; }

// Position layout of the dihedral reordering on m bits: 0, 2^(m-1), then
// (k, 2^m - k). Shared by Dihedral/Quaternion (m = n) and the even half of
// QD (m = n - 1, scaled by 2).
std::vector<std::uint64_t> dihedral_layout(unsigned m) {
  const std::uint64_t size = std::uint64_t{1} << m;
  std::vector<std::uint64_t> out{0, size / 2};
  for (std::uint64_t k = 1; k < size / 2; ++k) {
    out.push_back(k);
    out.push_back(size - k);
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> reorder_target(const GroupSpec& g) {
  require_nonabelian(g, "reorder_target");
  const std::uint64_t size = g.cyclic_order();
  const std::uint64_t half = size / 2;
  std::vector<std::uint64_t> out;
  out.reserve(size);
  switch (g.family()) {
    case Family::Dihedral:
    case Family::Quaternion:
      out = dihedral_layout(g.n());
      break;
    case Family::QP:
      for (std::uint64_t start : {0, 1})
        for (std::uint64_t j = start; j < half; j += 2) {
          out.push_back(j);
          out.push_back(j + half);
        }
      break;
    case Family::QD:
      for (std::uint64_t k : dihedral_layout(g.n() - 1)) out.push_back(2 * k);
      for (std::uint64_t i = 1; i < size; i += 4) {
        out.push_back(i);
        out.push_back(conjugate_index(g, i));
      }
      break;
    case Family::Cyclic:
      break;
  }
  if (out.size() != size || !is_permutation(std::vector<std::size_t>(out.begin(), out.end()))) {
    throw std::logic_error("reorder_target: layout is not a permutation");
  }
  return out;
}

std::vector<OrderedSummand> ordered_summands(const GroupSpec& g) {
  const auto target = reorder_target(g);
  std::vector<OrderedSummand> out;
  out.reserve(target.size());
  for (std::size_t p = 0; p < target.size();) {
    const std::uint64_t i = target[p];
    const std::uint64_t conj = conjugate_index(g, i);
    if (conj == i) {
      out.push_back({i, true});
      ++p;
      continue;
    }
    if (p + 1 >= target.size() || target[p + 1] != conj) {
      throw std::logic_error("ordered_summands: rho_i not followed by its inner conjugate");
    }
    out.push_back({i, false});
    out.push_back({conj, false});
    p += 2;
  }
  // Extendables must all precede the pairs.
  bool seen_pair = false;
  for (const auto& s : out) {
    if (!s.extendable) seen_pair = true;
    else if (seen_pair) throw std::logic_error("ordered_summands: extendable after a pair");
  }
  return out;
}

ComplexMatrix reorder_permutation(const GroupSpec& g) {
  require_matrix_size(g, "reorder_permutation");
  const auto target = reorder_target(g);
  return perm_matrix(std::vector<std::size_t>(target.begin(), target.end()));
}

ComplexMatrix equalizing_conjugator(const GroupSpec& g) {
  require_nonabelian(g, "equalizing_conjugator");
  require_matrix_size(g, "equalizing_conjugator");
  // Sequences rho_i, rho_i^y of degree-1 summands already coincide with the
  // inner conjugates, so no conjugation is needed.
  for (const auto& rho : cyclic_irreps(g.n())) {
    if (rho.degree() != 1) throw std::logic_error("equalizing_conjugator: degree > 1 summand");
  }
  return ComplexMatrix::identity(g.cyclic_order());
}

Representation extend_character(const GroupSpec& g, std::uint64_t i) {
  require_nonabelian(g, "extend_character");
  if (conjugate_index(g, i) != i) {
    throw std::invalid_argument("extend_character: rho_i is not extendable");
  }
  const Representation rho = cyclic_irrep(g.n(), i);
  const GroupElement y2 = multiply(g, generator_y(), generator_y());
  const Complex eps = std::sqrt(rho({y2.a, 0})(0, 0));
  Representation ext(g, rho.x_image(), ComplexMatrix(1, 1, {eps}));
  if (ext.relation_defect() > 1e-12) {
    throw std::logic_error("extend_character: extension violates the group relations");
  }
  return ext;
}

Representation induce_character(const GroupSpec& g, std::uint64_t i) {
  require_nonabelian(g, "induce_character");
  if (conjugate_index(g, i) == i) {
    throw std::invalid_argument("induce_character: rho_i is extendable");
  }
  const auto t = transversal();
  return induce(cyclic_irrep(g.n(), i), g, t);
}

ComplexMatrix twiddle(const GroupSpec& g) {
  require_nonabelian(g, "twiddle");
  require_matrix_size(g, "twiddle");
  std::vector<ComplexMatrix> blocks{ComplexMatrix::identity(g.cyclic_order())};
  const auto summands = ordered_summands(g);
  for (std::size_t p = 0; p < summands.size();) {
    if (summands[p].extendable) {
      blocks.push_back(extend_character(g, summands[p].index).y_image());
      ++p;
    } else {
      blocks.push_back(induce_character(g, summands[p].index).y_image());
      p += 2;
    }
  }
  return direct_sum(blocks);
}

ComplexMatrix equalizer(const GroupSpec& g) {
  require_nonabelian(g, "equalizer");
  require_matrix_size(g, "equalizer");
  // Identity on the lambda_0 half and on extended summands; the second
  // entry of each induced pair in the lambda_1 half gets -1.
  std::vector<Complex> diag(2 * g.cyclic_order(), 1.0);
  const auto summands = ordered_summands(g);
  for (std::size_t p = 0; p < summands.size();) {
    if (summands[p].extendable) {
      ++p;
      continue;
    }
    diag[g.cyclic_order() + p + 1] = -1.0;
    p += 2;
  }
  return ComplexMatrix::diagonal(diag);
}

ComplexMatrix combine_factors(const GroupSpec& g, const DecompositionFactors& f) {
  if (g.is_abelian()) return f.A * f.P * f.M * f.D * f.C;
  const auto i2 = ComplexMatrix::identity(2);
  return kron(i2, f.A * f.P * f.M) * f.D *
         kron(dft(2), ComplexMatrix::identity(g.cyclic_order())) * f.C;
}

DecompositionResult assemble(const GroupSpec& g) {
  require_matrix_size(g, "assemble");
  if (g.is_abelian()) {
    const auto size = g.cyclic_order();
    const auto id = ComplexMatrix::identity(size);
    DecompositionFactors f{dft(size), id, id, id, id};
    return {g, f.A, f, {{1, size}}, {}};
  }
  DecompositionFactors f{dft(g.cyclic_order()), reorder_permutation(g),
                         equalizing_conjugator(g), twiddle(g), equalizer(g)};
  const auto extendables = extendable_indices(g);
  const std::size_t pairs = (g.cyclic_order() - extendables.size()) / 2;
  // Each extendable yields two characters (lambda_0, lambda_1); each induced
  // 2-dim irreducible appears once per half.
  IrrepCensus census{{1, 2 * extendables.size()}, {2, pairs}};
  ComplexMatrix b = combine_factors(g, f);
  return {g, std::move(b), std::move(f), std::move(census), extendables};
}

}  // namespace nqft
