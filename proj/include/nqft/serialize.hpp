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

// Line-oriented interchange format.
//
//   circuit width=<w> gates=<m>
//   local q=<i> u=<re,im> <re,im> <re,im> <re,im>
//   cnot c=<i> t=<j>
//   mcu controls=<i:+|->[,<i:+|->...] t=<j> u=<re,im> <re,im> <re,im> <re,im>
//   perm <sigma(0)> <sigma(1)> ...
//
//   matrix rows=<r> cols=<c>
//   <re,im> <re,im> ...          (one line per row)
//
// 2x2 gate matrices are row-major. Reals are printed with 17 significant
// digits, so reading back reproduces every double exactly.

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "nqft/circuit.hpp"
#include "nqft/linalg.hpp"

namespace nqft {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

std::string format_real(double v);
std::string format_complex(Complex z);

void write_circuit(std::ostream& os, const Circuit& c);
Circuit read_circuit(std::istream& is);

void write_matrix(std::ostream& os, const ComplexMatrix& m);
ComplexMatrix read_matrix(std::istream& is);

std::string to_text(const Circuit& c);
Circuit circuit_from_text(const std::string& text);
std::string to_text(const ComplexMatrix& m);
ComplexMatrix matrix_from_text(const std::string& text);

}  // namespace nqft
