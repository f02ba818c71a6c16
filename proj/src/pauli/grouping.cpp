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

#include "hevqe/pauli/grouping.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hevqe::pauli {

std::size_t TpbGrouping::largest_set() const {
  std::size_t s = 0;
  for (const auto& set : sets) s = std::max(s, set.size());
  return s;
}

namespace {

// Partial basis of a set: letters on qubits touched so far, I elsewhere.
PauliString merge_letters(const PauliString& basis, const PauliString& term) {
  return PauliString(basis.num_qubits(), basis.x_bits() | term.x_bits(),
                     basis.z_bits() | term.z_bits());
}

}  // namespace

TpbGrouping group_tpb(const QubitHamiltonian& hamiltonian) {
  const auto& terms = hamiltonian.terms();
  std::vector<std::size_t> order(terms.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double ha = std::abs(terms[a].coefficient);
    const double hb = std::abs(terms[b].coefficient);
    if (ha != hb) return ha > hb;
    return terms[a].string < terms[b].string;
  });

  TpbGrouping grouping;
  std::vector<PauliString> partial;
  for (std::size_t index : order) {
    const PauliString& s = terms[index].string;
    bool placed = false;
    for (std::size_t g = 0; g < partial.size(); ++g) {
      if (qubitwise_compatible(partial[g], s)) {
        grouping.sets[g].push_back(index);
        partial[g] = merge_letters(partial[g], s);
        placed = true;
        break;
      }
    }
    if (!placed) {
      grouping.sets.push_back({index});
      partial.push_back(s);
    }
  }
  const std::size_t n = hamiltonian.num_qubits();
  for (const auto& p : partial) {
    PauliString basis = p;
    for (std::size_t q = 0; q < n; ++q) {
      if (basis.at(q) == Pauli::I) basis.set(q, Pauli::Z);
    }
    grouping.bases.push_back(basis);
  }
  return grouping;
}

bool is_valid_grouping(const QubitHamiltonian& hamiltonian,
                       const TpbGrouping& grouping) {
  const auto& terms = hamiltonian.terms();
  if (grouping.sets.size() != grouping.bases.size()) return false;
  std::vector<int> seen(terms.size(), 0);
  for (std::size_t g = 0; g < grouping.sets.size(); ++g) {
    const PauliString& basis = grouping.bases[g];
    if (basis.num_qubits() != hamiltonian.num_qubits()) return false;
    if (basis.weight() != basis.num_qubits()) return false;
    for (std::size_t index : grouping.sets[g]) {
      if (index >= terms.size()) return false;
      ++seen[index];
      if (!qubitwise_compatible(basis, terms[index].string)) return false;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

}  // namespace hevqe::pauli
