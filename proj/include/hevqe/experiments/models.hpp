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
#include <utility>
#include <vector>

#include "hevqe/pauli/qubit_hamiltonian.hpp"
#include "hevqe/sim/state.hpp"

namespace hevqe::experiments {

struct HeisenbergConfig {
  std::size_t n_qubits = 4;
  /// Undirected couplings; the default is the 4-cycle of a 2x2 plaquette.
  std::vector<std::pair<std::size_t, std::size_t>> edges{{0, 1}, {1, 3}, {3, 2}, {2, 0}};
  double coupling = 1.0;
  double field = 1.0;

  void validate() const;
};

/// J sum_edges (XX + YY + ZZ) + B sum_i Z_i.
pauli::QubitHamiltonian heisenberg_hamiltonian(const HeisenbergConfig& config);

/// <Z_i> for every qubit.
std::vector<double> z_expectations(const sim::DensityMatrix& rho);
std::vector<double> z_expectations(const sim::StateVector& psi);

/// Intensive magnetization (1/N) sum_i <Z_i>.
double magnetization(const std::vector<double>& z);
double magnetization(const sim::DensityMatrix& rho);

}  // namespace hevqe::experiments
