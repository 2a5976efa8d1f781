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

#include "nqft/circuit.hpp"
#include "nqft/groups.hpp"

namespace nqft {

/// Controlled phase diag(1,1,1,e^{i theta}) on (control, target), written
/// with two CNOTs and three single-qubit phase gates.
Circuit& add_controlled_phase(Circuit& c, std::size_t control, std::size_t target,
                              double theta);

/// DFT_{2^n} on n qubits, including the final qubit reversal.
Circuit qft_cyclic_circuit(unsigned n);

/// x -> x+1 mod 2^n as a cascade Lambda_{n-1}(X), ..., Lambda_1(X), X.
Circuit increment_circuit(unsigned n);

/// State map p -> reorder_target(p) for the dihedral layout on m qubits
/// (0, 2^(m-1), then (k, 2^m-k)). Built as the inverse of: qubit m-cycle
/// (decimation by two), invert the high bits on odd states, then add one to
/// the high bits on odd states.
Circuit dihedral_order_circuit(unsigned m);

/// Width n circuit whose matrix is reorder_permutation(G).
Circuit reorder_circuit(const GroupSpec& g);

/// Width n+1 circuit whose matrix is twiddle(G); qubit n is the y qubit.
Circuit twiddle_circuit(const GroupSpec& g);

/// Width n+1 circuit whose matrix is equalizer(G).
Circuit equalizer_circuit(const GroupSpec& g);

/// Complete transform; its matrix equals assemble(G).B. Gates run in the
/// order C, DFT_2 on the y qubit, D, P, DFT_{2^n}, i.e. right to left
/// through B = (I_2 ⊗ A P M) D (DFT_2 ⊗ I) C.
Circuit qft_circuit(const GroupSpec& g);

/// The P, D and C portion of qft_circuit(G) on its full width.
Circuit structure_circuit(const GroupSpec& g);

}  // namespace nqft
