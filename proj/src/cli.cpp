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


#include "nqft/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <ostream>

#include "nqft/circuit_library.hpp"
#include "nqft/serialize.hpp"
#include "nqft/synthesis.hpp"
#include "nqft/verify.hpp"

namespace nqft::cli {

namespace {

using json = nlohmann::json;

unsigned max_n(Command c) {
  return c == Command::Verify || c == Command::Emit ? kMaxMatrixN : kMaxSynthN;
}

unsigned min_n(Family f) { return f == Family::Cyclic ? 1 : 3; }

std::string fixed(double v, const char* spec = "%.3e") {
  char buf[40];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

int synth(const CliConfig& cfg, std::ostream& out) {
  const GroupSpec g(cfg.family, cfg.n);
  const Circuit c = qft_circuit(g);
  if (cfg.format == Format::Structured) {
    write_circuit(out, c);
    return kOk;
  }
  out << "group " << to_string(g) << '\n'
      << "width " << c.width() << '\n'
      << "gates " << c.size() << '\n'
      << "cost " << cost(c) << '\n';
  if (!g.is_abelian()) out << "structure_cost " << cost(structure_circuit(g)) << '\n';
  return kOk;
}

int verify(const CliConfig& cfg, std::ostream& out) {
  const GroupSpec g(cfg.family, cfg.n);
  const Tolerance tol = cfg.tolerance ? Tolerance(*cfg.tolerance) : Tolerance{};
  const DecompositionResult result = assemble(g);
  VerificationReport report = check_decomposition(result.B, g);
  report.circuit_matrix_defect = circuit_matches(qft_circuit(g), result.B);
  const unsigned ns[] = {cfg.n};
  report.cost_by_n = qft_costs(cfg.family, ns);
  const bool ok = report.passed(tol);

  if (cfg.format == Format::Structured) {
    json j = {
        {"group", to_string(g)},
        {"unitarity_defect", report.unitarity_defect},
        {"max_offblock", report.max_offblock},
        {"census_ok", report.census_ok},
        {"equal_summands_defect", report.equal_summands_defect},
        {"irreducible_ok", report.irreducible_ok},
        {"circuit_matrix_defect", *report.circuit_matrix_defect},
        {"cost", report.cost_by_n.front().cost},
        {"tolerance", tol.eps_entry},
        {"passed", ok},
    };
    out << j.dump(2) << '\n';
  } else {
    out << "group                 " << to_string(g) << '\n'
        << "unitarity_defect      " << fixed(report.unitarity_defect) << '\n'
        << "max_offblock          " << fixed(report.max_offblock) << '\n'
        << "equal_summands_defect " << fixed(report.equal_summands_defect) << '\n'
        << "circuit_matrix_defect " << fixed(*report.circuit_matrix_defect) << '\n'
        << "census_ok             " << (report.census_ok ? "yes" : "no") << '\n'
        << "irreducible_ok        " << (report.irreducible_ok ? "yes" : "no") << '\n'
        << "cost                  " << report.cost_by_n.front().cost << '\n'
        << "result                " << (ok ? "PASS" : "FAIL") << " (tol "
        << fixed(tol.eps_entry, "%g") << ")\n";
  }
  return ok ? kOk : kVerificationFailed;
}

int count(const CliConfig& cfg, std::ostream& out) {
  const auto [lo, hi] = cfg.range.value_or(std::pair{cfg.n, cfg.n});
  std::vector<unsigned> ns;
  for (unsigned n = lo; n <= hi; ++n) ns.push_back(n);
  const auto total = qft_costs(cfg.family, ns);
  std::vector<CostPoint> structure;
  if (cfg.family != Family::Cyclic) structure = structure_costs(cfg.family, ns);

  if (cfg.format == Format::Structured) {
    json rows = json::array();
    for (std::size_t i = 0; i < ns.size(); ++i) {
      json row = {{"n", total[i].n}, {"width", total[i].width}, {"cost", total[i].cost}};
      if (!structure.empty()) row["structure_cost"] = structure[i].cost;
      rows.push_back(std::move(row));
    }
    json j = {{"family", family_name(cfg.family)}, {"rows", rows}};
    if (ns.size() >= 4) j["slope"] = scaling_fit(total);
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "family " << family_name(cfg.family) << '\n';
  out << "n\twidth\tcost" << (structure.empty() ? "" : "\tP+D+C") << '\n';
  for (std::size_t i = 0; i < ns.size(); ++i) {
    out << total[i].n << '\t' << total[i].width << '\t' << total[i].cost;
    if (!structure.empty()) out << '\t' << structure[i].cost;
    out << '\n';
  }
  if (ns.size() >= 4) out << "slope " << fixed(scaling_fit(total), "%.3f") << '\n';
  return kOk;
}

int emit(const CliConfig& cfg, std::ostream& out) {
  const GroupSpec g(cfg.family, cfg.n);
  const ComplexMatrix b = assemble(g).B;
  if (cfg.format == Format::Structured) {
    write_matrix(out, b);
    return kOk;
  }
  out << "B for " << to_string(g) << " (" << b.rows() << "x" << b.cols() << ")\n";
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const Complex z = b(i, j);
      out << (j ? "  " : "") << fixed(z.real(), "%+.4f") << fixed(z.imag(), "%+.4f") << 'i';
    }
    out << '\n';
  }
  return kOk;
}

}  // namespace

void validate(const CliConfig& config) {
  const unsigned lo = min_n(config.family);
  const unsigned hi = max_n(config.command);
  auto check = [&](unsigned n) {
    if (n < lo || n > hi) {
      throw UsageError("n=" + std::to_string(n) + " out of range " + std::to_string(lo) + ".." +
                       std::to_string(hi) + " for " + std::string(family_name(config.family)));
    }
  };
  if (config.range) {
    if (config.command != Command::Count) throw UsageError("--range only applies to count");
    if (config.range->first > config.range->second) throw UsageError("empty --range");
    check(config.range->first);
    check(config.range->second);
  } else {
    check(config.n);
  }
  if (config.tolerance && !(*config.tolerance > 0.0)) throw UsageError("--tol must be positive");
}

std::pair<unsigned, unsigned> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  auto num = [&](std::string_view s) {
    unsigned v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw UsageError("bad range '" + text + "', expected a..b");
    }
    return v;
  };
  if (dots == std::string::npos) throw UsageError("bad range '" + text + "', expected a..b");
  const std::string_view sv(text);
  return {num(sv.substr(0, dots)), num(sv.substr(dots + 2))};
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  int code = kInternal;
  try {
    validate(config);
    switch (config.command) {
      case Command::Synth: code = synth(config, out); break;
      case Command::Verify: code = verify(config, out); break;
      case Command::Count: code = count(config, out); break;
      case Command::Emit: code = emit(config, out); break;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  out.flush();
  if (!out) {
    err << "error: failed to write output\n";
    return kInternal;
  }
  if (code == kVerificationFailed) err << "verification failed\n";
  return code;
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fast Fourier transform circuits for 2-groups with a cyclic normal subgroup"};
  app.require_subcommand(1, 1);

  CliConfig cfg;
  std::string family = "dihedral";
  std::string range;
  std::string format = "text";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--family", family, "cyclic|dihedral|quaternion|qp|qd");
    sub->add_option("--format", format, "text|structured")
        ->check(CLI::IsMember({"text", "structured"}));
  };
  auto* synth_cmd = app.add_subcommand("synth", "write the QFT circuit");
  auto* verify_cmd = app.add_subcommand("verify", "check the transform and its circuit");
  auto* count_cmd = app.add_subcommand("count", "gate cost over a range of n");
  auto* emit_cmd = app.add_subcommand("emit", "write the transform matrix");
  for (auto* sub : {synth_cmd, verify_cmd, count_cmd, emit_cmd}) {
    add_common(sub);
    sub->add_option("--n", cfg.n, "exponent; |G| = 2^(n+1), or 2^n for cyclic");
  }
  verify_cmd->add_option("--tol", cfg.tolerance, "entrywise tolerance");
  count_cmd->add_option("--range", range, "inclusive a..b");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (synth_cmd->parsed()) cfg.command = Command::Synth;
  if (verify_cmd->parsed()) cfg.command = Command::Verify;
  if (count_cmd->parsed()) cfg.command = Command::Count;
  if (emit_cmd->parsed()) cfg.command = Command::Emit;
  cfg.format = format == "structured" ? Format::Structured : Format::Text;

  const auto f = parse_family(family);
  if (!f) {
    err << "error: unknown family '" << family << "'\n";
    return kUsage;
  }
  cfg.family = *f;
  if (!range.empty()) {
    try {
      cfg.range = parse_range(range);
    } catch (const UsageError& e) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    }
  }
  return run(cfg, out, err);
}

}  // namespace nqft::cli
