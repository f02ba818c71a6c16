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

// Shared test inputs that need library types: random qubit Hamiltonians and a
// dense reconstruction of the ansatz state with optional analytic derivative.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hevqe/ansatz/ansatz.hpp"
#include "hevqe/pauli/qubit_hamiltonian.hpp"
#include "support/oracles.hpp"

namespace fixture {

/// `n_terms` distinct non-identity strings with N(0, 1) coefficients.
inline hevqe::pauli::QubitHamiltonian random_qubit_hamiltonian(std::size_t n_qubits,
                                                               std::size_t n_terms,
                                                               hevqe::Rng& rng,
                                                               double shift = 0.0) {
  const std::uint64_t total = (std::uint64_t{1} << (2 * n_qubits)) - 1;
  std::vector<std::uint64_t> codes(total);
  for (std::uint64_t c = 0; c < total; ++c) codes[c] = c + 1;
  for (std::size_t i = 0; i < n_terms; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.next_u64() % (total - i));
    std::swap(codes[i], codes[j]);
  }
  std::vector<hevqe::pauli::PauliTerm> terms;
  for (std::size_t i = 0; i < n_terms; ++i) {
    hevqe::pauli::PauliString p(n_qubits);
    for (std::size_t q = 0; q < n_qubits; ++q)
      p.set(q, static_cast<hevqe::pauli::Pauli>((codes[i] >> (2 * q)) & 3u));
    terms.push_back({rng.normal(), p});
  }
  return hevqe::pauli::QubitHamiltonian(n_qubits, std::move(terms), shift);
}

inline oracle::Matrix dense(const hevqe::pauli::QubitHamiltonian& h) {
  const auto dim = std::size_t{1} << h.num_qubits();
  oracle::Matrix m = h.identity_shift() * oracle::Matrix::Identity(dim, dim);
  for (const auto& t : h.terms()) m += t.coefficient * oracle::pauli_string(t.string.str());
  return m;
}

/// Trial state from dense matrices. With `derivative` set, returns the
/// derivative of the state with respect to that parameter instead.
inline oracle::Vector ansatz_state(const hevqe::ansatz::AnsatzConfig& config,
                                   const std::vector<double>& theta,
                                   std::optional<std::size_t> derivative = std::nullopt) {
  using hevqe::ansatz::Axis;
  const std::size_t n = config.n_qubits;
  const auto layout = hevqe::ansatz::parameter_layout(config);
  oracle::Vector psi = oracle::Vector::Zero(1 << n);
  psi(0) = 1.0;
  const oracle::cd minus_half_i(0.0, -0.5);
  auto factor = [&](std::size_t k, char axis) {
    const oracle::Matrix r = axis == 'Z' ? oracle::rz(theta[k]) : oracle::rx(theta[k]);
    if (derivative && *derivative == k) return oracle::Matrix(minus_half_i * oracle::pauli(axis) * r);
    return r;
  };
  auto rotation_layer = [&](std::size_t layer) {
    for (std::size_t q = 0; q < n; ++q) {
      oracle::Matrix zo = oracle::pauli('I'), x = zo, zi = zo;
      for (std::size_t k = 0; k < layout.size(); ++k) {
        if (layout[k].layer != layer || layout[k].qubit != q) continue;
        if (layout[k].axis == Axis::z_outer) zo = factor(k, 'Z');
        if (layout[k].axis == Axis::x) x = factor(k, 'X');
        if (layout[k].axis == Axis::z_inner) zi = factor(k, 'Z');
      }
      psi = oracle::embed(zo * x * zi, q, n) * psi;
    }
  };
  rotation_layer(0);
  for (std::size_t layer = 1; layer <= config.depth; ++layer) {
    for (const auto& group : config.topology.layers) {
      for (const auto& [c, t] : group) {
        oracle::Matrix g = oracle::Matrix::Zero(1 << n, 1 << n);
        for (const auto& [label, s] : config.entangler.terms()) {
          std::string letters(n, 'I');
          letters[c] = label[0];
          letters[t] = label[1];
          g += s * oracle::pauli_string(letters);
        }
        psi = oracle::expi(g, 1.0) * psi;
      }
    }
    rotation_layer(layer);
  }
  return psi;
}

}  // namespace fixture
