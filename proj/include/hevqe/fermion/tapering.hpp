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
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hevqe/fermion/encoding.hpp"
#include "hevqe/fermion/fermion_hamiltonian.hpp"
#include "hevqe/pauli/qubit_hamiltonian.hpp"

namespace hevqe::fermion {

/// Eigenvalues assigned to the two spin-parity qubits.
struct SymmetrySector {
  int electron_count = 0;
  int z_half = 1;   // qubit M/2 - 1: parity of the spin-up block
  int z_full = 1;   // qubit M - 1: parity of all modes
  bool degenerate_half = false;
};

/// Closed-shell table: m mod 4 = 0 -> (+1, +1), 2 -> (-1, +1), odd m ->
/// (z_half, -1) with z_half free. `odd_z_half` picks the free value.
SymmetrySector sector_from_electron_count(int m, int odd_z_half = 1);

/// Substitutes the sector eigenvalues on qubits M/2 - 1 and M - 1 and removes
/// them. Throws NotASymmetryError when a term has X or Y on either qubit and
/// InvalidArgument for the Jordan-Wigner scheme, whose qubits are not parities.
pauli::QubitHamiltonian taper(const pauli::QubitHamiltonian& hq,
                              const SymmetrySector& sector,
                              EncodingScheme scheme);

struct MoleculeOptions {
  EncodingScheme scheme = EncodingScheme::parity;
  /// Total electron count; the integral file's value when unset.
  std::optional<int> electrons;
  /// Number of lowest dressed spatial orbitals to freeze (both spins).
  std::size_t frozen_orbitals = 0;
  bool taper = true;
  /// Applied when the active electron count is odd.
  int odd_z_half = 1;
};

struct MoleculeMapping {
  pauli::QubitHamiltonian hamiltonian;
  FermionHamiltonian active;
  int active_electrons = 0;
  std::optional<SymmetrySector> sector;
  std::vector<std::string> warnings;
};

/// Dressing, freezing, encoding and tapering in one call. Orbitals are only
/// rotated when freezing is requested.
MoleculeMapping map_molecule(const IntegralFile& integrals,
                             const MoleculeOptions& options);

}  // namespace hevqe::fermion
