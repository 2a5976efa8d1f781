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

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nqft/groups.hpp"

namespace nqft::cli {

enum class Command { Synth, Verify, Count, Emit };
enum class Format { Text, Structured };

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kVerificationFailed = 3,
  kInternal = 4,
};

// Supported n per command. Matrix-producing commands stop at 8.
inline constexpr unsigned kMaxSynthN = 16;
inline constexpr unsigned kMaxMatrixN = 8;

struct CliConfig {
  Command command = Command::Synth;
  Family family = Family::Dihedral;
  unsigned n = 3;
  /// Inclusive n-range for count; falls back to [n, n].
  std::optional<std::pair<unsigned, unsigned>> range;
  Format format = Format::Text;
  std::optional<double> tolerance;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws UsageError for out-of-range n, bad ranges, or tol <= 0.
void validate(const CliConfig& config);

/// "a..b" with a <= b.
std::pair<unsigned, unsigned> parse_range(const std::string& text);

/// Executes a validated config. Payload goes to `out`, one-line diagnostics
/// to `err`.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs them.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nqft::cli
