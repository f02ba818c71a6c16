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

#include <Eigen/Dense>

#include "hevqe/pauli/qubit_hamiltonian.hpp"

namespace hevqe::pauli {

/// Largest qubit count accepted by the dense routines unless overridden.
inline constexpr std::size_t kDenseQubitLimit = 12;

/// Dense 2^n x 2^n matrix of a single Pauli string (big-endian basis order).
Eigen::MatrixXcd to_matrix(const PauliString& p);

/// Dense matrix of H including the identity shift. Throws ResourceError above
/// `qubit_limit`.
Eigen::MatrixXcd to_matrix(const QubitHamiltonian& h,
                           std::size_t qubit_limit = kDenseQubitLimit);

/// Sorted eigenvalues of H.
Eigen::VectorXd spectrum(const QubitHamiltonian& h,
                         std::size_t qubit_limit = kDenseQubitLimit);

/// Smallest eigenvalue of H.
double ground_energy(const QubitHamiltonian& h,
                     std::size_t qubit_limit = kDenseQubitLimit);

struct GroundState {
  double energy = 0.0;
  Eigen::VectorXcd vector;
};

GroundState ground_state(const QubitHamiltonian& h,
                         std::size_t qubit_limit = kDenseQubitLimit);

}  // namespace hevqe::pauli
