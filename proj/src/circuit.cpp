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

#include "nqft/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace nqft {

namespace {

constexpr double kGateUnitarityTol = 1e-12;
constexpr std::size_t kMaxWidth = 62;
constexpr std::size_t kMaxMatrixWidth = 14;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_single_qubit_unitary(const ComplexMatrix& u) {
  if (u.rows() != 2 || u.cols() != 2) {
    throw std::invalid_argument("gate matrix must be 2x2");
  }
  if (!is_unitary(u, Tolerance(kGateUnitarityTol))) {
    throw std::invalid_argument("gate matrix is not unitary");
  }
}

void check_qubits(std::span<const std::size_t> qubits, std::size_t width) {
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] >= width) {
      throw std::invalid_argument("qubit " + std::to_string(qubits[i]) +
                                  " out of range for width " + std::to_string(width));
    }
    for (std::size_t j = 0; j < i; ++j)
      if (qubits[i] == qubits[j]) {
        throw std::invalid_argument("qubit " + std::to_string(qubits[i]) +
                                    " used twice in one gate");
      }
  }
}

// Bit masks selecting basis states on which a controlled gate fires.
struct ControlMask {
  std::uint64_t care = 0;
  std::uint64_t value = 0;
};

ControlMask control_mask(std::span<const Control> controls) {
  ControlMask m;
  for (const auto& c : controls) {
    const std::uint64_t bit = std::uint64_t{1} << c.qubit;
    m.care |= bit;
    if (c.polarity == Polarity::Positive) m.value |= bit;
  }
  return m;
}

void apply_single(const ComplexMatrix& u, std::size_t target, ControlMask mask,
                  std::span<Complex> state) {
  const std::uint64_t bit = std::uint64_t{1} << target;
  const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
  for (std::uint64_t i = 0; i < state.size(); ++i) {
    if ((i & bit) || (i & mask.care) != mask.value) continue;
    const Complex a = state[i];
    const Complex b = state[i | bit];
    state[i] = u00 * a + u01 * b;
    state[i | bit] = u10 * a + u11 * b;
  }
}

std::uint64_t permute_bits(std::uint64_t index, std::span<const std::size_t> sigma) {
  std::uint64_t out = 0;
  for (std::size_t q = 0; q < sigma.size(); ++q)
    if (index >> q & 1) out |= std::uint64_t{1} << sigma[q];
  return out;
}

ComplexMatrix single_qubit_adjoint(const ComplexMatrix& u) { return u.adjoint(); }

}  // namespace

namespace gates {

ComplexMatrix x() { return {{0.0, 1.0}, {1.0, 0.0}}; }

ComplexMatrix z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

ComplexMatrix h() {
  const double s = 1.0 / std::numbers::sqrt2;
  return {{s, s}, {s, -s}};
}

ComplexMatrix phase(double theta) { return {{1.0, 0.0}, {0.0, std::polar(1.0, theta)}}; }

}  // namespace gates

Circuit::Circuit(std::size_t width) : width_(width) {
  if (width == 0 || width > kMaxWidth) {
    throw std::invalid_argument("Circuit: width must be in [1, " +
                                std::to_string(kMaxWidth) + "]");
  }
}

Circuit& Circuit::add(Gate gate) {
  validate(gate, width_);
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.width() != width_) throw std::invalid_argument("Circuit::append: width mismatch");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

Circuit& Circuit::append(const Circuit& other, std::span<const std::size_t> qubit_map) {
  return append(relabel(other, qubit_map, width_));
}

void validate(const Gate& gate, std::size_t width) {
  std::visit(overloaded{
                 [&](const Local& g) {
                   check_single_qubit_unitary(g.u);
                   check_qubits(std::vector<std::size_t>{g.target}, width);
                 },
                 [&](const CNot& g) {
                   check_qubits(std::vector<std::size_t>{g.control, g.target}, width);
                 },
                 [&](const MultiControlled& g) {
                   check_single_qubit_unitary(g.u);
                   if (g.controls.empty()) {
                     throw std::invalid_argument("MultiControlled gate without controls");
                   }
                   std::vector<std::size_t> qubits{g.target};
                   for (const auto& c : g.controls) qubits.push_back(c.qubit);
                   check_qubits(qubits, width);
                 },
                 [&](const QubitPerm& g) {
                   if (g.sigma.size() != width || !is_permutation(g.sigma)) {
                     throw std::invalid_argument("QubitPerm is not a permutation of the register");
                   }
                 },
             },
             gate);
}

std::vector<std::size_t> touched_qubits(const Gate& gate) {
  return std::visit(overloaded{
                        [](const Local& g) { return std::vector<std::size_t>{g.target}; },
                        [](const CNot& g) {
                          return std::vector<std::size_t>{g.control, g.target};
                        },
                        [](const MultiControlled& g) {
                          std::vector<std::size_t> q{g.target};
                          for (const auto& c : g.controls) q.push_back(c.qubit);
                          return q;
                        },
                        [](const QubitPerm& g) {
                          std::vector<std::size_t> q;
                          for (std::size_t i = 0; i < g.sigma.size(); ++i)
                            if (g.sigma[i] != i) q.push_back(i);
                          return q;
                        },
                    },
                    gate);
}

std::vector<std::pair<std::size_t, std::size_t>> transpositions(
    std::span<const std::size_t> sigma) {
  if (!is_permutation(sigma)) throw std::invalid_argument("transpositions: not a permutation");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::vector<bool> done(sigma.size(), false);
  for (std::size_t start = 0; start < sigma.size(); ++start) {
    if (done[start]) continue;
    // Cycle q0 -> q1 -> ... : swapping (q0, q1), (q0, q2), ... in that order
    // carries the content of q_i to q_{i+1}.
    done[start] = true;
    for (std::size_t q = sigma[start]; q != start; q = sigma[q]) {
      done[q] = true;
      out.emplace_back(start, q);
    }
  }
  return out;
}

void apply_gate(const Gate& gate, std::span<Complex> state) {
  std::visit(overloaded{
                 [&](const Local& g) { apply_single(g.u, g.target, {}, state); },
                 [&](const CNot& g) {
                   const std::uint64_t c = std::uint64_t{1} << g.control;
                   const std::uint64_t t = std::uint64_t{1} << g.target;
                   for (std::uint64_t i = 0; i < state.size(); ++i)
                     if ((i & c) && !(i & t)) std::swap(state[i], state[i | t]);
                 },
                 [&](const MultiControlled& g) {
                   apply_single(g.u, g.target, control_mask(g.controls), state);
                 },
                 [&](const QubitPerm& g) {
                   std::vector<Complex> out(state.size());
                   for (std::uint64_t i = 0; i < state.size(); ++i)
                     out[permute_bits(i, g.sigma)] = state[i];
                   std::copy(out.begin(), out.end(), state.begin());
                 },
             },
             gate);
}

ComplexMatrix to_matrix(const Circuit& c) {
  if (c.width() > kMaxMatrixWidth) {
    throw std::invalid_argument("to_matrix: width too large for a dense matrix");
  }
  const std::size_t dim = std::size_t{1} << c.width();
  ComplexMatrix m(dim, dim);
  std::vector<Complex> column(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    std::fill(column.begin(), column.end(), Complex{});
    column[j] = 1.0;
    for (const auto& g : c.gates()) apply_gate(g, column);
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = column[i];
  }
  return m;
}

std::vector<Complex> apply_to_state(const Circuit& c, std::span<const Complex> state) {
  if (c.width() >= 63 || state.size() != (std::size_t{1} << c.width())) {
    throw std::invalid_argument("apply_to_state: state length must be 2^width");
  }
  double norm2 = 0.0;
  for (const Complex& z : state) norm2 += std::norm(z);
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-10) {
    throw std::invalid_argument("apply_to_state: state is not normalized");
  }
  std::vector<Complex> out(state.begin(), state.end());
  for (const auto& g : c.gates()) apply_gate(g, out);
  return out;
}

Circuit inverse(const Circuit& c) {
  Circuit out(c.width());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
    out.add(std::visit(overloaded{
                           [](const Local& g) -> Gate {
                             return Local{single_qubit_adjoint(g.u), g.target};
                           },
                           [](const CNot& g) -> Gate { return g; },
                           [](const MultiControlled& g) -> Gate {
                             return MultiControlled{single_qubit_adjoint(g.u), g.controls,
                                                    g.target};
                           },
                           [](const QubitPerm& g) -> Gate {
                             std::vector<std::size_t> inv(g.sigma.size());
                             for (std::size_t q = 0; q < g.sigma.size(); ++q) inv[g.sigma[q]] = q;
                             return QubitPerm{std::move(inv)};
                           },
                       },
                       *it));
  }
  return out;
}

Circuit relabel(const Circuit& c, std::span<const std::size_t> qubit_map,
                std::size_t new_width) {
  if (qubit_map.size() != c.width()) {
    throw std::invalid_argument("relabel: map must cover every qubit");
  }
  check_qubits(qubit_map, new_width);
  Circuit out(new_width);
  for (const auto& gate : c.gates()) {
    out.add(std::visit(overloaded{
                           [&](const Local& g) -> Gate {
                             return Local{g.u, qubit_map[g.target]};
                           },
                           [&](const CNot& g) -> Gate {
                             return CNot{qubit_map[g.control], qubit_map[g.target]};
                           },
                           [&](const MultiControlled& g) -> Gate {
                             std::vector<Control> controls;
                             for (const auto& ctl : g.controls)
                               controls.push_back({qubit_map[ctl.qubit], ctl.polarity});
                             return MultiControlled{g.u, std::move(controls),
                                                    qubit_map[g.target]};
                           },
                           [&](const QubitPerm& g) -> Gate {
                             std::vector<std::size_t> sigma(new_width);
                             for (std::size_t q = 0; q < new_width; ++q) sigma[q] = q;
                             for (std::size_t q = 0; q < g.sigma.size(); ++q)
                               sigma[qubit_map[q]] = qubit_map[g.sigma[q]];
                             return QubitPerm{std::move(sigma)};
                           },
                       },
                       gate));
  }
  return out;
}

Circuit with_control(const Circuit& c, Control control) {
  if (control.qubit >= c.width()) throw std::invalid_argument("with_control: qubit out of range");
  Circuit out(c.width());
  auto add_controlled = [&](const ComplexMatrix& u, std::vector<Control> controls,
                            std::size_t target) {
    controls.push_back(control);
    out.add(MultiControlled{u, std::move(controls), target});
  };
  for (const auto& gate : c.gates()) {
    const auto touched = touched_qubits(gate);
    if (std::find(touched.begin(), touched.end(), control.qubit) != touched.end()) {
      throw std::invalid_argument("with_control: control qubit is used by the circuit");
    }
    std::visit(overloaded{
                   [&](const Local& g) { add_controlled(g.u, {}, g.target); },
                   [&](const CNot& g) { add_controlled(gates::x(), {{g.control}}, g.target); },
                   [&](const MultiControlled& g) { add_controlled(g.u, g.controls, g.target); },
                   [&](const QubitPerm& g) {
                     // Controlled swap as three Toffolis.
                     for (const auto& [a, b] : transpositions(g.sigma)) {
                       add_controlled(gates::x(), {{a}}, b);
                       add_controlled(gates::x(), {{b}}, a);
                       add_controlled(gates::x(), {{a}}, b);
                     }
                   },
               },
               gate);
  }
  return out;
}

Circuit controlled(const Circuit& c) {
  std::vector<std::size_t> map(c.width());
  for (std::size_t q = 0; q < map.size(); ++q) map[q] = q;
  return with_control(relabel(c, map, c.width() + 1), {c.width(), Polarity::Positive});
}

CostModel CostModel::asymptotic() {
  CostModel m;
  m.multi_controlled = [](std::size_t k, std::size_t width) -> std::uint64_t {
    if (k <= 1) return 1;
    if (k + 1 == width) return static_cast<std::uint64_t>(width) * width;
    return k;
  };
  return m;
}

std::uint64_t gate_cost(const Gate& gate, std::size_t width, const CostModel& m) {
  return std::visit(overloaded{
                        [&](const Local&) { return m.local; },
                        [&](const CNot&) { return m.cnot; },
                        [&](const MultiControlled& g) {
                          return m.multi_controlled(g.controls.size(), width);
                        },
                        [&](const QubitPerm& g) {
                          return m.swap * transpositions(g.sigma).size();
                        },
                    },
                    gate);
}

std::uint64_t cost(const Circuit& c, const CostModel& m) {
  std::uint64_t total = 0;
  for (const auto& g : c.gates()) total += gate_cost(g, c.width(), m);
  return total;
}

}  // namespace nqft
