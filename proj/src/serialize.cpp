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

#include "nqft/serialize.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace nqft {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t end = s.find(sep, start);
    const std::size_t stop = end == std::string_view::npos ? s.size() : end;
    if (stop > start) out.push_back(s.substr(start, stop - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

class LineReader {
 public:
  explicit LineReader(std::istream& is) : is_(is) {}

  // Next non-empty line, split on spaces.
  std::vector<std::string_view> next(const char* expecting) {
    while (std::getline(is_, buffer_)) {
      ++line_;
      if (!buffer_.empty() && buffer_.back() == '\r') buffer_.pop_back();
      auto tokens = split(buffer_, ' ');
      if (!tokens.empty()) return tokens;
    }
    throw ParseError(line_, std::string("unexpected end of input, expecting ") + expecting);
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, what); }

 private:
  std::istream& is_;
  std::string buffer_;
  std::size_t line_ = 0;
};

std::size_t parse_count(const LineReader& r, std::string_view s) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    r.fail("bad integer '" + std::string(s) + "'");
  }
  return v;
}

double parse_real(const LineReader& r, std::string_view s) {
  // strtod accepts the exact %.17g output, including inf/nan spellings that
  // the matrix constructor then rejects.
  const std::string tmp(s);
  char* end = nullptr;
  const double v = std::strtod(tmp.c_str(), &end);
  if (tmp.empty() || end != tmp.c_str() + tmp.size()) r.fail("bad real '" + tmp + "'");
  return v;
}

Complex parse_complex(const LineReader& r, std::string_view s) {
  const auto parts = split(s, ',');
  if (parts.size() != 2 || s.front() == ',' || s.back() == ',') {
    r.fail("bad complex '" + std::string(s) + "'");
  }
  return {parse_real(r, parts[0]), parse_real(r, parts[1])};
}

// "key=value" -> value, checking the key.
std::string_view field(const LineReader& r, std::string_view token, std::string_view key) {
  if (token.size() <= key.size() || token.substr(0, key.size()) != key ||
      token[key.size()] != '=') {
    r.fail("expected " + std::string(key) + "=..., got '" + std::string(token) + "'");
  }
  return token.substr(key.size() + 1);
}

ComplexMatrix parse_gate_matrix(const LineReader& r, std::span<const std::string_view> tokens) {
  // tokens: "u=<re,im>", "<re,im>", "<re,im>", "<re,im>"
  if (tokens.size() != 4) r.fail("gate matrix needs four complex entries");
  std::vector<Complex> entries{parse_complex(r, field(r, tokens[0], "u"))};
  for (std::size_t i = 1; i < 4; ++i) entries.push_back(parse_complex(r, tokens[i]));
  try {
    return ComplexMatrix(2, 2, std::move(entries));
  } catch (const std::invalid_argument& e) {
    r.fail(e.what());
  }
}

void write_gate_matrix(std::ostream& os, const ComplexMatrix& u) {
  os << " u=" << format_complex(u(0, 0)) << ' ' << format_complex(u(0, 1)) << ' '
     << format_complex(u(1, 0)) << ' ' << format_complex(u(1, 1));
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_complex(Complex z) { return format_real(z.real()) + "," + format_real(z.imag()); }

void write_circuit(std::ostream& os, const Circuit& c) {
  os << "circuit width=" << c.width() << " gates=" << c.size() << '\n';
  for (const auto& gate : c.gates()) {
    std::visit(overloaded{
                   [&](const Local& g) {
                     os << "local q=" << g.target;
                     write_gate_matrix(os, g.u);
                   },
                   [&](const CNot& g) { os << "cnot c=" << g.control << " t=" << g.target; },
                   [&](const MultiControlled& g) {
                     os << "mcu controls=";
                     for (std::size_t i = 0; i < g.controls.size(); ++i) {
                       if (i) os << ',';
                       os << g.controls[i].qubit << ':'
                          << (g.controls[i].polarity == Polarity::Positive ? '+' : '-');
                     }
                     os << " t=" << g.target;
                     write_gate_matrix(os, g.u);
                   },
                   [&](const QubitPerm& g) {
                     os << "perm";
                     for (std::size_t s : g.sigma) os << ' ' << s;
                   },
               },
               gate);
    os << '\n';
  }
}

Circuit read_circuit(std::istream& is) {
  LineReader r(is);
  auto header = r.next("circuit header");
  if (header.size() != 3 || header[0] != "circuit") r.fail("expected 'circuit width=<w> gates=<m>'");
  const std::size_t width = parse_count(r, field(r, header[1], "width"));
  const std::size_t count = parse_count(r, field(r, header[2], "gates"));
  std::optional<Circuit> circuit;
  try {
    circuit.emplace(width);
  } catch (const std::invalid_argument& e) {
    r.fail(e.what());
  }
  for (std::size_t k = 0; k < count; ++k) {
    auto t = r.next("gate");
    Gate gate = Local{gates::x(), 0};
    if (t[0] == "local") {
      if (t.size() != 6) r.fail("local gate: expected q=<i> and four entries");
      gate = Local{parse_gate_matrix(r, std::span(t).subspan(2)),
                   parse_count(r, field(r, t[1], "q"))};
    } else if (t[0] == "cnot") {
      if (t.size() != 3) r.fail("cnot gate: expected c=<i> t=<j>");
      gate = CNot{parse_count(r, field(r, t[1], "c")), parse_count(r, field(r, t[2], "t"))};
    } else if (t[0] == "mcu") {
      if (t.size() != 7) r.fail("mcu gate: expected controls=, t= and four entries");
      std::vector<Control> controls;
      for (auto spec : split(field(r, t[1], "controls"), ',')) {
        const auto colon = spec.find(':');
        if (colon == std::string_view::npos || colon + 2 != spec.size()) {
          r.fail("bad control '" + std::string(spec) + "'");
        }
        const char pol = spec.back();
        if (pol != '+' && pol != '-') r.fail("control polarity must be + or -");
        controls.push_back({parse_count(r, spec.substr(0, colon)),
                            pol == '+' ? Polarity::Positive : Polarity::Negative});
      }
      gate = MultiControlled{parse_gate_matrix(r, std::span(t).subspan(3)), std::move(controls),
                             parse_count(r, field(r, t[2], "t"))};
    } else if (t[0] == "perm") {
      std::vector<std::size_t> sigma;
      for (std::size_t i = 1; i < t.size(); ++i) sigma.push_back(parse_count(r, t[i]));
      gate = QubitPerm{std::move(sigma)};
    } else {
      r.fail("unknown gate '" + std::string(t[0]) + "'");
    }
    try {
      circuit->add(std::move(gate));
    } catch (const std::invalid_argument& e) {
      r.fail(e.what());
    }
  }
  return std::move(*circuit);
}

void write_matrix(std::ostream& os, const ComplexMatrix& m) {
  os << "matrix rows=" << m.rows() << " cols=" << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << format_complex(m(i, j));
    }
    os << '\n';
  }
}

ComplexMatrix read_matrix(std::istream& is) {
  LineReader r(is);
  auto header = r.next("matrix header");
  if (header.size() != 3 || header[0] != "matrix") r.fail("expected 'matrix rows=<r> cols=<c>'");
  const std::size_t rows = parse_count(r, field(r, header[1], "rows"));
  const std::size_t cols = parse_count(r, field(r, header[2], "cols"));
  if (rows == 0 || cols == 0) r.fail("matrix dimensions must be positive");
  std::vector<Complex> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    auto t = r.next("matrix row");
    if (t.size() != cols) r.fail("row has " + std::to_string(t.size()) + " entries, expected " +
                                 std::to_string(cols));
    for (auto tok : t) entries.push_back(parse_complex(r, tok));
  }
  try {
    return ComplexMatrix(rows, cols, std::move(entries));
  } catch (const std::invalid_argument& e) {
    r.fail(e.what());
  }
}

std::string to_text(const Circuit& c) {
  std::ostringstream os;
  write_circuit(os, c);
  return os.str();
}

Circuit circuit_from_text(const std::string& text) {
  std::istringstream is(text);
  return read_circuit(is);
}

std::string to_text(const ComplexMatrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

ComplexMatrix matrix_from_text(const std::string& text) {
  std::istringstream is(text);
  return read_matrix(is);
}

}  // namespace nqft
