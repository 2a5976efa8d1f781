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

#include "nqft/circuit_library.hpp"

#include <numbers>
#include <numeric>
#include <stdexcept>

namespace nqft {

namespace {

void require_nonabelian(const GroupSpec& g, const char* what) {
  if (g.is_abelian()) {
    throw std::invalid_argument(std::string(what) + ": requires a non-abelian family");
  }
}

std::vector<std::size_t> iota_map(std::size_t count, std::size_t offset = 0) {
  std::vector<std::size_t> map(count);
  std::iota(map.begin(), map.end(), offset);
  return map;
}

// sigma[q] = q + 1 mod width: bit q of the input becomes bit q+1.
QubitPerm rotate_up(std::size_t width) {
  std::vector<std::size_t> sigma(width);
  for (std::size_t q = 0; q < width; ++q) sigma[q] = (q + 1) % width;
  return {std::move(sigma)};
}

// Controls y (qubit n) and qubit-1..n-1 all zero: fires only on positions
// 0 and 1 of the y coset.
std::vector<Control> y_and_low_pair(unsigned n) {
  std::vector<Control> controls{{n, Polarity::Positive}};
  for (std::size_t q = 1; q < n; ++q) controls.push_back({q, Polarity::Negative});
  return controls;
}

}  // namespace

Circuit& add_controlled_phase(Circuit& c, std::size_t control, std::size_t target,
                              double theta) {
  // Phase theta/2 * (t + c - (t xor c)) = theta * c * t.
  c.add(Local{gates::phase(theta / 2), target});
  c.add(CNot{control, target});
  c.add(Local{gates::phase(-theta / 2), target});
  c.add(CNot{control, target});
  c.add(Local{gates::phase(theta / 2), control});
  return c;
}

Circuit qft_cyclic_circuit(unsigned n) {
  if (n == 0) throw std::invalid_argument("qft_cyclic_circuit: n must be at least 1");
  Circuit c(n);
  for (std::size_t t = n; t-- > 0;) {
    c.add(Local{gates::h(), t});
    for (std::size_t ctl = t; ctl-- > 0;) {
      const double theta = 2.0 * std::numbers::pi / static_cast<double>(std::uint64_t{2} << (t - ctl));
      add_controlled_phase(c, ctl, t, theta);
    }
  }
  if (n > 1) {
    std::vector<std::size_t> reverse(n);
    for (std::size_t q = 0; q < n; ++q) reverse[q] = n - 1 - q;
    c.add(QubitPerm{std::move(reverse)});
  }
  return c;
}

Circuit increment_circuit(unsigned n) {
  if (n == 0) throw std::invalid_argument("increment_circuit: n must be at least 1");
  Circuit c(n);
  // Flip bit t when all lower bits are 1, most significant first.
  for (std::size_t t = n - 1; t >= 1; --t) {
    if (t == 1) {
      c.add(CNot{0, 1});
    } else {
      std::vector<Control> controls;
      for (std::size_t q = 0; q < t; ++q) controls.push_back({q});
      c.add(MultiControlled{gates::x(), std::move(controls), t});
    }
  }
  c.add(Local{gates::x(), 0});
  return c;
}

Circuit dihedral_order_circuit(unsigned m) {
  if (m < 2) throw std::invalid_argument("dihedral_order_circuit: m must be at least 2");
  // Forward map: character index -> position.
  Circuit forward(m);
  forward.add(rotate_up(m));
  for (std::size_t q = 1; q < m; ++q) forward.add(CNot{0, q});
  // controlled(increment) puts its control on the top qubit; move it to
  // qubit 0 and the counter to qubits 1..m-1.
  std::vector<std::size_t> map = iota_map(m - 1, 1);
  map.push_back(0);
  forward.append(controlled(increment_circuit(m - 1)), map);
  return inverse(forward);
}

Circuit reorder_circuit(const GroupSpec& g) {
  require_nonabelian(g, "reorder_circuit");
  const unsigned n = g.n();
  switch (g.family()) {
    case Family::Dihedral:
    case Family::Quaternion:
      return dihedral_order_circuit(n);
    case Family::QP: {
      // Exchange the top and bottom qubits.
      Circuit c(n);
      std::vector<std::size_t> sigma = iota_map(n);
      std::swap(sigma[0], sigma[n - 1]);
      c.add(QubitPerm{std::move(sigma)});
      return c;
    }
    case Family::QD: {
      Circuit c(n);
      // Top qubit 0: even characters, dihedral layout on the remaining bits.
      Circuit even(n);
      even.append(dihedral_order_circuit(n - 1), iota_map(n - 1));
      c.append(with_control(even, {n - 1, Polarity::Negative}));
      // Top qubit 1: odd characters. Position bit 0 selects the partner
      // j xor (2^(n-2) - 1), so it toggles bits 1..n-3.
      for (std::size_t q = 1; q + 2 < n; ++q) {
        c.add(MultiControlled{gates::x(), {{n - 1}, {0}}, q});
      }
      // Character index = 2 * (low bits) + top bit.
      c.add(rotate_up(n));
      return c;
    }
    case Family::Cyclic:
      break;
  }
  throw std::logic_error("reorder_circuit: unhandled family");
}

Circuit twiddle_circuit(const GroupSpec& g) {
  require_nonabelian(g, "twiddle_circuit");
  const unsigned n = g.n();
  Circuit c(n + 1);
  switch (g.family()) {
    case Family::QP:
      // Swap within each induced pair: y = 1 and top position bit = 1.
      c.add(MultiControlled{gates::x(), {{n}, {n - 1}}, 0});
      break;
    case Family::Dihedral:
    case Family::QD:
    case Family::Quaternion:
      // On the y coset swap every pair (2k, 2k+1), then undo it on the
      // extendables at positions 0 and 1.
      c.add(CNot{n, 0});
      c.add(MultiControlled{gates::x(), y_and_low_pair(n), 0});
      if (g.family() == Family::Quaternion) {
        // Pair k carries rho_k(y^2) = (-1)^k below the diagonal.
        c.add(MultiControlled{gates::z(), {{n}, {1}}, 0});
      }
      break;
    case Family::Cyclic:
      break;
  }
  return c;
}

Circuit equalizer_circuit(const GroupSpec& g) {
  require_nonabelian(g, "equalizer_circuit");
  const unsigned n = g.n();
  Circuit c(n + 1);
  if (g.family() == Family::QP) {
    c.add(MultiControlled{gates::z(), {{n}, {n - 1}}, 0});
  } else {
    c.add(MultiControlled{gates::z(), {{n}}, 0});
    c.add(MultiControlled{gates::z(), y_and_low_pair(n), 0});
  }
  return c;
}

Circuit structure_circuit(const GroupSpec& g) {
  require_nonabelian(g, "structure_circuit");
  const unsigned n = g.n();
  Circuit c(n + 1);
  c.append(equalizer_circuit(g));
  c.append(twiddle_circuit(g));
  c.append(reorder_circuit(g), iota_map(n));
  return c;
}

Circuit qft_circuit(const GroupSpec& g) {
  const unsigned n = g.n();
  if (g.is_abelian()) return qft_cyclic_circuit(n);
  Circuit c(n + 1);
  c.append(equalizer_circuit(g));
  c.add(Local{gates::h(), n});
  c.append(twiddle_circuit(g));
  c.append(reorder_circuit(g), iota_map(n));
  c.append(qft_cyclic_circuit(n), iota_map(n));
  return c;
}

}  // namespace nqft
