// Copyright 2026 The hevqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hevqe/pauli/qubit_hamiltonian.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "hevqe/common/errors.hpp"

namespace hevqe::pauli {

QubitHamiltonian::QubitHamiltonian(std::size_t n_qubits,
                                   std::vector<PauliTerm> terms,
                                   double identity_shift,
                                   double prune_threshold)
    : n_qubits_(n_qubits), identity_shift_(identity_shift) {
  if (n_qubits == 0 || n_qubits > PauliString::kMaxQubits) {
    throw InvalidArgument("QubitHamiltonian: bad qubit count " +
                          std::to_string(n_qubits));
  }
  std::map<PauliString, double> merged;
  for (auto& term : terms) {
    if (term.string.num_qubits() != n_qubits) {
      throw DimensionError("QubitHamiltonian: term " + term.string.str() +
                           " does not act on " + std::to_string(n_qubits) +
                           " qubits");
    }
    if (term.string.is_identity()) {
      identity_shift_ += term.coefficient;
    } else {
      merged[term.string] += term.coefficient;
    }
  }
  terms_.reserve(merged.size());
  for (auto& [string, coefficient] : merged) {
    if (std::abs(coefficient) >= prune_threshold) {
      terms_.push_back({coefficient, string});
    }
  }
}

double QubitHamiltonian::max_abs_coefficient() const {
  double h = 0.0;
  for (const auto& t : terms_) h = std::max(h, std::abs(t.coefficient));
  return h;
}

QubitHamiltonian QubitHamiltonian::with_shift(double extra) const {
  QubitHamiltonian copy = *this;
  copy.identity_shift_ += extra;
  return copy;
}

namespace {

std::string format_coefficient(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, end);
}

}  // namespace

std::string QubitHamiltonian::to_text() const {
  std::ostringstream out;
  out << format_coefficient(identity_shift_) << '\t'
      << std::string(n_qubits_, 'I') << '\n';
  for (const auto& t : terms_) {
    out << format_coefficient(t.coefficient) << '\t' << t.string.str() << '\n';
  }
  return out.str();
}

QubitHamiltonian QubitHamiltonian::parse(std::istream& in,
                                         const std::string& source) {
  std::vector<PauliTerm> terms;
  double shift = 0.0;
  std::size_t n_qubits = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string coefficient_text, letters, extra;
    if (!(fields >> coefficient_text)) continue;
    if (!(fields >> letters)) {
      throw ParseError(source, line_no, "expected `coefficient<TAB>letters`");
    }
    if (fields >> extra) {
      throw ParseError(source, line_no, "unexpected trailing field '" + extra + "'");
    }
    double coefficient = 0.0;
    const char* first = coefficient_text.data();
    const char* last = first + coefficient_text.size();
    auto [ptr, ec] = std::from_chars(first, last, coefficient);
    if (ec != std::errc() || ptr != last || !std::isfinite(coefficient)) {
      throw ParseError(source, line_no,
                       "invalid coefficient '" + coefficient_text + "'");
    }
    PauliString string(1);
    try {
      string = PauliString::from_string(letters);
    } catch (const Error& e) {
      throw ParseError(source, line_no, e.what());
    }
    if (n_qubits == 0) {
      n_qubits = string.num_qubits();
    } else if (string.num_qubits() != n_qubits) {
      throw ParseError(source, line_no,
                       "term acts on " + std::to_string(string.num_qubits()) +
                           " qubits, expected " + std::to_string(n_qubits));
    }
    if (string.is_identity()) {
      shift += coefficient;
    } else {
      terms.push_back({coefficient, string});
    }
  }
  if (n_qubits == 0) throw ParseError(source, line_no, "no terms found");
  return QubitHamiltonian(n_qubits, std::move(terms), shift);
}

QubitHamiltonian QubitHamiltonian::from_text(std::string_view text,
                                             const std::string& source) {
  std::istringstream in{std::string(text)};
  return parse(in, source);
}

QubitHamiltonian QubitHamiltonian::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open Hamiltonian file '" + path + "'");
  return parse(in, path);
}

}  // namespace hevqe::pauli
