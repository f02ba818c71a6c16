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
#include <vector>

#include "hevqe/pauli/qubit_hamiltonian.hpp"

namespace hevqe::pauli {

/// Partition of a Hamiltonian's non-identity terms into tensor-product-basis
/// (TPB) sets. sets[i] holds indices into QubitHamiltonian::terms(); bases[i]
/// carries one measurement letter from {X, Y, Z} per qubit (Z where no member
/// acts).
struct TpbGrouping {
  std::vector<std::vector<std::size_t>> sets;
  std::vector<PauliString> bases;

  std::size_t num_sets() const { return sets.size(); }
  std::size_t largest_set() const;
};

/// Greedy first-fit grouping over qubitwise compatibility. Terms are visited
/// by descending |h|, ties broken by lexicographic string order.
TpbGrouping group_tpb(const QubitHamiltonian& hamiltonian);

/// True when `grouping` partitions every term of `hamiltonian` exactly once
/// and each term is diagonal in its set's basis.
bool is_valid_grouping(const QubitHamiltonian& hamiltonian,
                       const TpbGrouping& grouping);

}  // namespace hevqe::pauli
