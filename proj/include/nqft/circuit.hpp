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

// Gate-level circuit IR.
//
// Conventions:
//  - qubit 0 is the least significant bit of a basis index;
//  - gates are listed in temporal order, so the circuit unitary is
//    G_m * ... * G_1 acting on column state vectors;
//  - QubitPerm{sigma} moves the tensor factor on qubit q to qubit sigma[q].

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "nqft/linalg.hpp"

namespace nqft {

enum class Polarity { Positive, Negative };

struct Control {
  std::size_t qubit;
  Polarity polarity = Polarity::Positive;

  friend bool operator==(const Control&, const Control&) = default;
};

struct Local {
  ComplexMatrix u;
  std::size_t target;
};

struct CNot {
  std::size_t control;
  std::size_t target;
};

/// Lambda_k(u): u on `target` where every positive control reads 1 and every
/// negative control reads 0.
struct MultiControlled {
  ComplexMatrix u;
  std::vector<Control> controls;
  std::size_t target;
};

struct QubitPerm {
  std::vector<std::size_t> sigma;
};

using Gate = std::variant<Local, CNot, MultiControlled, QubitPerm>;

namespace gates {
ComplexMatrix x();
ComplexMatrix z();
ComplexMatrix h();
/// diag(1, e^{i theta}).
ComplexMatrix phase(double theta);
}  // namespace gates

class Circuit {
 public:
  explicit Circuit(std::size_t width);

  std::size_t width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Validates and appends. Throws std::invalid_argument on a bad gate.
  Circuit& add(Gate gate);

  /// Appends a circuit of the same width.
  Circuit& append(const Circuit& other);

  /// Appends `other` with its qubit q placed on qubit_map[q].
  Circuit& append(const Circuit& other, std::span<const std::size_t> qubit_map);

 private:
  std::size_t width_;
  std::vector<Gate> gates_;
};

/// Throws std::invalid_argument if `gate` is not valid on `width` qubits.
void validate(const Gate& gate, std::size_t width);

/// Qubits read or written by the gate (all qubits moved by a QubitPerm).
std::vector<std::size_t> touched_qubits(const Gate& gate);

/// Swaps whose temporal product realizes the qubit permutation.
std::vector<std::pair<std::size_t, std::size_t>> transpositions(
    std::span<const std::size_t> sigma);

/// Applies one gate in place.
void apply_gate(const Gate& gate, std::span<Complex> state);

/// Unitary of the whole circuit, 2^width square.
ComplexMatrix to_matrix(const Circuit& c);

/// Gate-by-gate simulation. The state must have length 2^width and unit norm.
std::vector<Complex> apply_to_state(const Circuit& c, std::span<const Complex> state);

/// Circuit with the adjoint unitary.
Circuit inverse(const Circuit& c);

/// Same gates on a wider register, qubit q placed on qubit_map[q].
Circuit relabel(const Circuit& c, std::span<const std::size_t> qubit_map,
                std::size_t new_width);

/// Adds `control` to every gate. The control qubit must be idle in `c`.
Circuit with_control(const Circuit& c, Control control);

/// Width w+1 circuit with matrix I_{2^w} ⊕ to_matrix(c): the new most
/// significant qubit controls every gate.
Circuit controlled(const Circuit& c);

/// Per-kind gate weights.
struct CostModel {
  std::uint64_t local = 1;
  std::uint64_t cnot = 1;
  /// Cost of one qubit transposition inside a QubitPerm.
  std::uint64_t swap = 3;
  /// Weight of a gate with k controls on a register of the given width.
  std::function<std::uint64_t(std::size_t controls, std::size_t width)> multi_controlled;

  /// Asymptotic-class weights: w(1) = 1, w(k) = k for 2 <= k < width-1,
  /// w(width-1) = width^2; swaps cost 3 CNOTs.
  static CostModel asymptotic();
};

std::uint64_t gate_cost(const Gate& gate, std::size_t width, const CostModel& m);
std::uint64_t cost(const Circuit& c, const CostModel& m = CostModel::asymptotic());

}  // namespace nqft
