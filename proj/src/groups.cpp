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

#include "nqft/groups.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace nqft {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 5> kFamilyNames{{
    {Family::Cyclic, "cyclic"},
    {Family::Dihedral, "dihedral"},
    {Family::Quaternion, "quaternion"},
    {Family::QP, "qp"},
    {Family::QD, "qd"},
}};

// Keeps 2^(n+1) comfortably inside 64 bits and the element index inside size_t.
constexpr unsigned kMaxExponent = 30;

bool is_diagonal(const ComplexMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) != Complex(0)) return false;
  return true;
}

// Characters of Z_{2^n} take values on the 2^30-th roots of unity (n <= 30).
constexpr std::uint64_t kPhaseGrid = std::uint64_t{1} << 30;

// z^k. Entries that sit on the root-of-unity grid are powered exactly in
// Z/2^30 and rounded once; repeated products would lose about one ulp of
// phase per factor, which reaches 1e-12 by k ~ 2^8.
Complex scalar_power(Complex z, std::uint64_t k) {
  const double turns = std::arg(z) / (2.0 * std::numbers::pi) * static_cast<double>(kPhaseGrid);
  const double nearest = std::round(turns);
  if (std::abs(std::abs(z) - 1.0) < 1e-12 && std::abs(turns - nearest) < 1e-6) {
    const auto j = static_cast<std::uint64_t>(static_cast<long long>(nearest) +
                                              static_cast<long long>(kPhaseGrid)) %
                   kPhaseGrid;
    const std::uint64_t jk = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(j) * k) % kPhaseGrid);
    return root_of_unity(kPhaseGrid, static_cast<long long>(jk));
  }
  return std::pow(z, static_cast<double>(k));
}

ComplexMatrix matrix_power(ComplexMatrix base, std::uint64_t k) {
  if (k == 0) return ComplexMatrix::identity(base.rows());
  if (k == 1) return base;
  if (is_diagonal(base)) {
    for (std::size_t i = 0; i < base.rows(); ++i) base(i, i) = scalar_power(base(i, i), k);
    return base;
  }
  ComplexMatrix result = ComplexMatrix::identity(base.rows());
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kFamilyNames)
    if (fam == f) return name;
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [fam, n] : kFamilyNames)
    if (n == name) return fam;
  return std::nullopt;
}

GroupSpec::GroupSpec(Family family, unsigned n) : family_(family), n_(n) {
  const unsigned min_n = family == Family::Cyclic ? 1 : 3;
  if (n < min_n || n > kMaxExponent) {
    throw std::invalid_argument(std::string(family_name(family)) + ": n=" +
                                std::to_string(n) + " outside [" +
                                std::to_string(min_n) + ", " +
                                std::to_string(kMaxExponent) + "]");
  }
}

std::string to_string(const GroupSpec& g) {
  return std::string(family_name(g.family())) + "(n=" + std::to_string(g.n()) +
         ", order=" + std::to_string(g.order()) + ")";
}

ConjugacyAction conjugacy_action(const GroupSpec& g) {
  const std::uint64_t m = g.cyclic_order();
  switch (g.family()) {
    case Family::Dihedral:
    case Family::Quaternion:
      return {m - 1};
    case Family::QP:
      return {m / 2 + 1};
    case Family::QD:
      return {m / 2 - 1};
    case Family::Cyclic:
      break;
  }
  throw std::invalid_argument("conjugacy_action: cyclic group has no y generator");
}

GroupElement identity_element() { return {0, 0}; }
GroupElement generator_x() { return {1, 0}; }
GroupElement generator_y() { return {0, 1}; }

bool is_valid(const GroupSpec& g, const GroupElement& e) {
  if (e.a >= g.cyclic_order()) return false;
  return g.is_abelian() ? e.b == 0 : e.b <= 1;
}

GroupElement multiply(const GroupSpec& g, const GroupElement& lhs, const GroupElement& rhs) {
  const std::uint64_t mask = g.cyclic_order() - 1;
  if (g.is_abelian()) return {(lhs.a + rhs.a) & mask, 0};
  // x^a y^b x^c y^d = x^(a + c r^b) y^(b+d), since y x^c = x^(c r) y.
  const std::uint64_t r = conjugacy_action(g).exponent_r;
  const std::uint64_t moved = lhs.b ? (rhs.a * r) & mask : rhs.a;
  std::uint64_t a = (lhs.a + moved) & mask;
  unsigned b = lhs.b + rhs.b;
  if (b == 2) {
    b = 0;
    if (g.family() == Family::Quaternion) a = (a + g.cyclic_order() / 2) & mask;
  }
  return {a, b};
}

GroupElement inverse(const GroupSpec& g, const GroupElement& e) {
  const std::uint64_t m = g.cyclic_order();
  if (e.b == 0) return {(m - e.a) & (m - 1), 0};
  // (x^a y)^-1 = y^-1 x^-a; write y^-1 = x^s y with y^2 = x^(m - s).
  const GroupElement y_inv =
      g.family() == Family::Quaternion ? GroupElement{m / 2, 1} : GroupElement{0, 1};
  return multiply(g, y_inv, {(m - e.a) & (m - 1), 0});
}

GroupElement power(const GroupSpec& g, const GroupElement& e, std::uint64_t k) {
  GroupElement result = identity_element();
  GroupElement base = e;
  while (k > 0) {
    if (k & 1) result = multiply(g, result, base);
    k >>= 1;
    if (k > 0) base = multiply(g, base, base);
  }
  return result;
}

std::vector<GroupElement> all_elements(const GroupSpec& g) {
  std::vector<GroupElement> out;
  out.reserve(g.order());
  const unsigned cosets = g.is_abelian() ? 1 : 2;
  for (unsigned b = 0; b < cosets; ++b)
    for (std::uint64_t a = 0; a < g.cyclic_order(); ++a) out.push_back({a, b});
  return out;
}

std::size_t element_index(const GroupSpec& g, const GroupElement& e) {
  if (!is_valid(g, e)) throw std::invalid_argument("element_index: invalid element");
  return static_cast<std::size_t>(e.b * g.cyclic_order() + e.a);
}

Representation::Representation(GroupSpec group, ComplexMatrix x_image, ComplexMatrix y_image)
    : group_(group), x_(std::move(x_image)), y_(std::move(y_image)) {
  if (!x_.is_square() || !y_.is_square() || x_.rows() != y_.rows()) {
    throw std::invalid_argument("Representation: generator images must be square and equal size");
  }
}

Representation::Representation(GroupSpec group, ComplexMatrix x_image)
    : Representation(group, x_image, ComplexMatrix::identity(x_image.rows())) {}

ComplexMatrix Representation::operator()(const GroupElement& e) const {
  if (!is_valid(group_, e)) throw std::invalid_argument("Representation: invalid element");
  ComplexMatrix out = matrix_power(x_, e.a);
  if (e.b) out = out * y_;
  return out;
}

double Representation::relation_defect() const {
  const auto id = ComplexMatrix::identity(degree());
  double worst = max_abs_diff(matrix_power(x_, group_.cyclic_order()), id);
  if (group_.is_abelian()) return worst;
  const ComplexMatrix y2 = y_ * y_;
  const ComplexMatrix y2_target = group_.family() == Family::Quaternion
                                      ? matrix_power(x_, group_.cyclic_order() / 2)
                                      : id;
  worst = std::max(worst, max_abs_diff(y2, y2_target));
  // y x y^-1 = x^r, checked as y x = x^r y to avoid inverting.
  const ComplexMatrix xr = matrix_power(x_, conjugacy_action(group_).exponent_r);
  worst = std::max(worst, max_abs_diff(y_ * x_, xr * y_));
  return worst;
}

ComplexMatrix regular_representation(const GroupSpec& g, const GroupElement& e) {
  if (!is_valid(g, e)) throw std::invalid_argument("regular_representation: invalid element");
  const auto elements = all_elements(g);
  ComplexMatrix m(elements.size(), elements.size());
  for (std::size_t row = 0; row < elements.size(); ++row)
    m(row, element_index(g, multiply(g, elements[row], e))) = 1.0;
  return m;
}

Representation cyclic_irrep(unsigned n, std::uint64_t i) {
  const GroupSpec z(Family::Cyclic, n);
  if (i >= z.cyclic_order()) throw std::invalid_argument("cyclic_irrep: index out of range");
  return Representation(
      z, ComplexMatrix(1, 1, {root_of_unity(z.cyclic_order(), static_cast<long long>(i))}));
}

std::vector<Representation> cyclic_irreps(unsigned n) {
  const GroupSpec z(Family::Cyclic, n);
  std::vector<Representation> out;
  out.reserve(z.cyclic_order());
  for (std::uint64_t i = 0; i < z.cyclic_order(); ++i) out.push_back(cyclic_irrep(n, i));
  return out;
}

Representation inner_conjugate(const Representation& rho, const GroupSpec& group,
                               const GroupElement& t) {
  if (!rho.group().is_abelian() || rho.group().n() != group.n()) {
    throw std::invalid_argument("inner_conjugate: rho must live on the cyclic subgroup <x>");
  }
  if (!is_valid(group, t)) throw std::invalid_argument("inner_conjugate: invalid t");
  const GroupElement c = multiply(group, multiply(group, t, generator_x()), inverse(group, t));
  // <x> is normal, so this cannot leave the subgroup.
  if (c.b != 0) throw std::logic_error("inner_conjugate: t x t^-1 left <x>");
  return Representation(rho.group(), rho({c.a, 0}));
}

SubgroupRepresentation on_cyclic_subgroup(const Representation& rho) {
  if (!rho.group().is_abelian()) {
    throw std::invalid_argument("on_cyclic_subgroup: rho must be a cyclic-group representation");
  }
  return {rho.degree(), [rho](const GroupElement& e) -> std::optional<ComplexMatrix> {
            if (e.b != 0) return std::nullopt;
            return rho({e.a, 0});
          }};
}

SubgroupRepresentation trivial_of_trivial() {
  return {1, [](const GroupElement& e) -> std::optional<ComplexMatrix> {
            if (e == identity_element()) return ComplexMatrix::identity(1);
            return std::nullopt;
          }};
}

ComplexMatrix induced_image(const GroupSpec& group, const SubgroupRepresentation& rho,
                            std::span<const GroupElement> transversal,
                            const GroupElement& e) {
  const std::size_t d = rho.degree;
  const std::size_t k = transversal.size();
  ComplexMatrix out(k * d, k * d);
  for (std::size_t i = 0; i < k; ++i) {
    const GroupElement left = multiply(group, transversal[i], e);
    for (std::size_t j = 0; j < k; ++j) {
      const GroupElement h = multiply(group, left, inverse(group, transversal[j]));
      const auto block = rho.evaluate(h);
      if (!block) continue;
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) out(i * d + r, j * d + c) = (*block)(r, c);
    }
  }
  return out;
}

Representation induce(const GroupSpec& group, const SubgroupRepresentation& rho,
                      std::span<const GroupElement> transversal) {
  if (transversal.empty()) throw std::invalid_argument("induce: empty transversal");
  for (const auto& t : transversal)
    if (!is_valid(group, t)) throw std::invalid_argument("induce: invalid transversal element");
  std::uint64_t subgroup_order = 0;
  for (const auto& e : all_elements(group))
    if (rho.evaluate(e)) ++subgroup_order;
  if (subgroup_order * transversal.size() != group.order()) {
    throw std::invalid_argument("induce: transversal size does not match the index");
  }
  // Distinct right cosets: t_i t_j^-1 outside H for i != j.
  for (std::size_t i = 0; i < transversal.size(); ++i)
    for (std::size_t j = i + 1; j < transversal.size(); ++j)
      if (rho.evaluate(multiply(group, transversal[i], inverse(group, transversal[j])))) {
        throw std::invalid_argument("induce: transversal repeats a coset");
      }
  ComplexMatrix xi = induced_image(group, rho, transversal, generator_x());
  if (group.is_abelian()) return Representation(group, std::move(xi));
  return Representation(group, std::move(xi),
                        induced_image(group, rho, transversal, generator_y()));
}

Representation induce(const Representation& rho, const GroupSpec& group,
                      std::span<const GroupElement> transversal) {
  if (group.is_abelian() || rho.group().n() != group.n()) {
    throw std::invalid_argument("induce: rho must be on <x> of a non-abelian group");
  }
  return induce(group, on_cyclic_subgroup(rho), transversal);
}

std::uint64_t conjugate_index(const GroupSpec& g, std::uint64_t i) {
  return (i * conjugacy_action(g).exponent_r) & (g.cyclic_order() - 1);
}

std::set<std::uint64_t> extendable_indices(const GroupSpec& g) {
  if (g.is_abelian()) throw std::invalid_argument("extendable_indices: abelian group");
  std::set<std::uint64_t> out;
  for (std::uint64_t i = 0; i < g.cyclic_order(); ++i)
    if (conjugate_index(g, i) == i) out.insert(i);
  return out;
}

}  // namespace nqft
