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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hevqe/pauli/pauli_string.hpp"

namespace hevqe::pauli {

struct PauliTerm {
  double coefficient = 0.0;
  PauliString string;
};

/// H = identity_shift * I + sum_a h_a P_a.
///
/// Construction merges duplicate strings, moves the all-identity term into
/// identity_shift and drops terms with |h_a| below the pruning threshold.
/// Terms are stored in lexicographic string order.
class QubitHamiltonian {
 public:
  static constexpr double kDefaultPruneThreshold = 1e-12;

  QubitHamiltonian(std::size_t n_qubits, std::vector<PauliTerm> terms,
                   double identity_shift = 0.0,
                   double prune_threshold = kDefaultPruneThreshold);

  std::size_t num_qubits() const { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  /// Number of non-identity terms.
  std::size_t size() const { return terms_.size(); }
  double identity_shift() const { return identity_shift_; }
  /// Largest |h_a| over non-identity terms (0 when there are none).
  double max_abs_coefficient() const;

  QubitHamiltonian with_shift(double extra) const;

  /// Text form: one `coefficient<TAB>letters` line per term, identity first.
  std::string to_text() const;
  /// Parses the text form. Blank lines and `#` comments are ignored.
  static QubitHamiltonian parse(std::istream& in,
                                const std::string& source = "<input>");
  static QubitHamiltonian from_text(std::string_view text,
                                    const std::string& source = "<input>");
  static QubitHamiltonian load(const std::string& path);

 private:
  std::size_t n_qubits_;
  std::vector<PauliTerm> terms_;
  double identity_shift_;
};

}  // namespace hevqe::pauli
