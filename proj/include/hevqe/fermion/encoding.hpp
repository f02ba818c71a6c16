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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hevqe/fermion/fermion_hamiltonian.hpp"
#include "hevqe/pauli/qubit_hamiltonian.hpp"

namespace hevqe::fermion {

enum class EncodingScheme { jordan_wigner, parity, binary_tree };

std::string to_string(EncodingScheme scheme);
/// Accepts "jordan_wigner", "parity" and "binary_tree"; throws InvalidArgument.
EncodingScheme encoding_from_string(std::string_view name);

/// Binary matrix A of the linear encoding: qubit k stores the parity of the
/// occupations n_j with bit j of row k set. Row k is returned as a bitmask.
/// Throws InvalidArgument when binary_tree is requested for a mode count that
/// is not a power of two, or when modes exceed the Pauli width.
std::vector<std::uint64_t> encoding_matrix(EncodingScheme scheme,
                                           std::size_t n_modes);

struct ComplexPauliTerm {
  std::complex<double> coefficient;
  pauli::PauliString string;
};

/// Pauli expansion of a+_mode (creation) or a_mode under the scheme.
std::vector<ComplexPauliTerm> ladder_operator(EncodingScheme scheme,
                                              std::size_t n_modes,
                                              std::size_t mode, bool creation);

/// Maps H onto n_modes qubits. The result is Hermitian; imaginary parts left
/// after accumulation above 1e-10 indicate a bug and raise Error.
pauli::QubitHamiltonian encode(const FermionHamiltonian& h,
                               EncodingScheme scheme);

}  // namespace hevqe::fermion
