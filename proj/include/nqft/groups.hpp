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

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nqft/linalg.hpp"

namespace nqft {

// Groups of order 2^n (Cyclic) or 2^(n+1) generated by x of order 2^n and,
// for the non-abelian families, y with y x y^-1 = x^r. Every element has the
// unique normal form x^a y^b.

enum class Family { Cyclic, Dihedral, Quaternion, QP, QD };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

class GroupSpec {
 public:
  /// Throws std::invalid_argument unless n >= 1 (Cyclic) or n >= 3 (others).
  GroupSpec(Family family, unsigned n);

  Family family() const { return family_; }
  unsigned n() const { return n_; }
  bool is_abelian() const { return family_ == Family::Cyclic; }

  /// |<x>| = 2^n.
  std::uint64_t cyclic_order() const { return std::uint64_t{1} << n_; }
  std::uint64_t order() const { return is_abelian() ? cyclic_order() : 2 * cyclic_order(); }
  /// Number of qubits needed to index the group elements.
  unsigned qubits() const { return is_abelian() ? n_ : n_ + 1; }

  /// The normal subgroup <x> as a group in its own right.
  GroupSpec cyclic_subgroup() const { return GroupSpec(Family::Cyclic, n_); }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  Family family_;
  unsigned n_;
};

std::string to_string(const GroupSpec& g);

/// The exponent r with y x y^-1 = x^r.
struct ConjugacyAction {
  std::uint64_t exponent_r;
};

/// Throws for Cyclic.
ConjugacyAction conjugacy_action(const GroupSpec& g);

struct GroupElement {
  std::uint64_t a = 0;  // exponent of x, mod 2^n
  unsigned b = 0;       // exponent of y, 0 or 1

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

GroupElement identity_element();
GroupElement generator_x();
GroupElement generator_y();

bool is_valid(const GroupSpec& g, const GroupElement& e);

GroupElement multiply(const GroupSpec& g, const GroupElement& lhs, const GroupElement& rhs);
GroupElement inverse(const GroupSpec& g, const GroupElement& e);
GroupElement power(const GroupSpec& g, const GroupElement& e, std::uint64_t k);

/// Elements in basis order (x^0..x^(2^n-1), then x^0 y..x^(2^n-1) y).
std::vector<GroupElement> all_elements(const GroupSpec& g);
std::size_t element_index(const GroupSpec& g, const GroupElement& e);

/// A representation given by the images of its generators. For Cyclic
/// groups only the x image is meaningful and y_image is the identity.
class Representation {
 public:
  Representation(GroupSpec group, ComplexMatrix x_image, ComplexMatrix y_image);
  /// Degree-1 or cyclic-group convenience: y image is the identity.
  Representation(GroupSpec group, ComplexMatrix x_image);

  const GroupSpec& group() const { return group_; }
  std::size_t degree() const { return x_.rows(); }
  const ComplexMatrix& x_image() const { return x_; }
  const ComplexMatrix& y_image() const { return y_; }

  /// images[x]^a * images[y]^b.
  ComplexMatrix operator()(const GroupElement& e) const;

  /// Max defect over the defining relations x^(2^n) = 1, y^2 = 1 (or
  /// y^2 = x^(2^(n-1)) for Quaternion) and y x y^-1 = x^r.
  double relation_defect() const;

 private:
  GroupSpec group_;
  ComplexMatrix x_;
  ComplexMatrix y_;
};

/// Regular representation in the all_elements basis: phi(g) has a 1 at
/// (idx(h), idx(h*g)). This is the induction of the trivial representation
/// of the trivial subgroup along all_elements, and phi(g)phi(h) = phi(gh).
ComplexMatrix regular_representation(const GroupSpec& g, const GroupElement& e);

/// rho_i(x) = exp(2 pi i * i / 2^n), i = 0..2^n-1.
std::vector<Representation> cyclic_irreps(unsigned n);
Representation cyclic_irrep(unsigned n, std::uint64_t i);

/// x -> rho(t x t^-1) for rho a representation of the normal subgroup <x>
/// of `group`.
Representation inner_conjugate(const Representation& rho, const GroupSpec& group,
                               const GroupElement& t);

/// A representation of some subgroup H, evaluated only on H. Returns
/// nullopt outside H (the dotted extension-by-zero).
struct SubgroupRepresentation {
  std::size_t degree;
  std::function<std::optional<ComplexMatrix>(const GroupElement&)> evaluate;
};

/// Representation of <x> viewed as a subgroup representation of `group`.
SubgroupRepresentation on_cyclic_subgroup(const Representation& rho);

/// Trivial representation of the trivial subgroup.
SubgroupRepresentation trivial_of_trivial();

/// Induced representation evaluated at a single element: block (i,j) is
/// rho(t_i e t_j^-1) when that lies in H, zero otherwise.
ComplexMatrix induced_image(const GroupSpec& group, const SubgroupRepresentation& rho,
                            std::span<const GroupElement> transversal,
                            const GroupElement& e);

/// Induction to `group` along a right-coset transversal. Throws if
/// `transversal` is not one.
Representation induce(const GroupSpec& group, const SubgroupRepresentation& rho,
                      std::span<const GroupElement> transversal);
Representation induce(const Representation& rho, const GroupSpec& group,
                      std::span<const GroupElement> transversal);

/// i * r mod 2^n: rho_i^y = rho_{conjugate_index(i)}.
std::uint64_t conjugate_index(const GroupSpec& g, std::uint64_t i);

/// Indices i with rho_i^y = rho_i. Throws for Cyclic.
std::set<std::uint64_t> extendable_indices(const GroupSpec& g);

}  // namespace nqft
