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

#include "hevqe/fermion/tapering.hpp"

#include "hevqe/common/errors.hpp"

namespace hevqe::fermion {

SymmetrySector sector_from_electron_count(int m, int odd_z_half) {
  if (m < 0) throw InvalidArgument("electron count must be non-negative");
  if (odd_z_half != 1 && odd_z_half != -1) {
    throw InvalidArgument("z_half must be +1 or -1");
  }
  SymmetrySector sector;
  sector.electron_count = m;
  switch (m % 4) {
    case 0:
      sector.z_half = 1;
      sector.z_full = 1;
      break;
    case 2:
      sector.z_half = -1;
      sector.z_full = 1;
      break;
    default:
      sector.z_half = odd_z_half;
      sector.z_full = -1;
      sector.degenerate_half = true;
      break;
  }
  return sector;
}

pauli::QubitHamiltonian taper(const pauli::QubitHamiltonian& hq,
                              const SymmetrySector& sector,
                              EncodingScheme scheme) {
  if (scheme == EncodingScheme::jordan_wigner) {
    throw InvalidArgument("Jordan-Wigner qubits do not hold spin parities");
  }
  const std::size_t m = hq.num_qubits();
  if (m < 2 || m % 2 != 0) {
    throw InvalidArgument("tapering needs an even qubit count of at least 2");
  }
  const std::size_t half_qubit = m / 2 - 1;
  const std::size_t full_qubit = m - 1;
  const std::size_t kept = m - 2;

  std::vector<pauli::PauliTerm> terms;
  double shift = hq.identity_shift();
  for (const auto& term : hq.terms()) {
    double value = term.coefficient;
    for (auto [qubit, eigenvalue] :
         {std::pair{half_qubit, sector.z_half}, std::pair{full_qubit, sector.z_full}}) {
      const pauli::Pauli letter = term.string.at(qubit);
      if (letter == pauli::Pauli::X || letter == pauli::Pauli::Y) {
        throw NotASymmetryError("term " + term.string.str() + " has " +
                                pauli::to_char(letter) + " on symmetry qubit " +
                                std::to_string(qubit));
      }
      if (letter == pauli::Pauli::Z) value *= eigenvalue;
    }
    pauli::PauliString reduced(kept);
    std::size_t out = 0;
    for (std::size_t q = 0; q < m; ++q) {
      if (q == half_qubit || q == full_qubit) continue;
      reduced.set(out++, term.string.at(q));
    }
    if (reduced.is_identity()) {
      shift += value;
    } else {
      terms.push_back({value, reduced});
    }
  }
  return pauli::QubitHamiltonian(kept, std::move(terms), shift);
}

MoleculeMapping map_molecule(const IntegralFile& integrals,
                             const MoleculeOptions& options) {
  const FermionHamiltonian& full = integrals.hamiltonian;
  const std::size_t half = full.num_modes() / 2;
  if (options.frozen_orbitals >= half) {
    throw InvalidArgument("cannot freeze " +
                          std::to_string(options.frozen_orbitals) +
                          " of " + std::to_string(half) + " spatial orbitals");
  }
  const int active_electrons =
      options.electrons.value_or(integrals.n_electrons) - 2 * static_cast<int>(options.frozen_orbitals);
  if (active_electrons < 0) {
    throw InvalidArgument("more frozen electrons than electrons in the system");
  }

  std::vector<std::string> warnings;
  FermionHamiltonian active = full;
  if (options.frozen_orbitals > 0) {
    const BogoliubovResult dressed = bogoliubov_diagonalize(full);
    std::set<std::size_t> frozen;
    for (std::size_t k = 0; k < options.frozen_orbitals; ++k) {
      frozen.insert(k);
      frozen.insert(k + half);
    }
    warnings = frozen_core_warnings(dressed.dressed, frozen);
    active = freeze_core(dressed.dressed, frozen);
  }

  pauli::QubitHamiltonian encoded = encode(active, options.scheme);
  std::optional<SymmetrySector> sector;
  if (options.taper) {
    sector = sector_from_electron_count(active_electrons, options.odd_z_half);
    encoded = taper(encoded, *sector, options.scheme);
  }
  return {std::move(encoded), std::move(active), active_electrons, sector,
          std::move(warnings)};
}

}  // namespace hevqe::fermion
