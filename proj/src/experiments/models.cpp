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

#include "hevqe/experiments/models.hpp"

#include <cmath>
#include <set>
#include <string>

#include "hevqe/common/errors.hpp"
#include "hevqe/estimate/estimator.hpp"

namespace hevqe::experiments {

void HeisenbergConfig::validate() const {
  if (n_qubits == 0 || n_qubits > pauli::PauliString::kMaxQubits) {
    throw InvalidArgument("Heisenberg model needs 1..64 qubits");
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [a, b] : edges) {
    if (a >= n_qubits || b >= n_qubits || a == b) {
      throw InvalidArgument("bad Heisenberg edge (" + std::to_string(a) + "," +
                            std::to_string(b) + ")");
    }
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) {
      throw InvalidArgument("duplicate Heisenberg edge (" + std::to_string(a) +
                            "," + std::to_string(b) + ")");
    }
  }
}

pauli::QubitHamiltonian heisenberg_hamiltonian(const HeisenbergConfig& config) {
  config.validate();
  const std::size_t n = config.n_qubits;
  std::vector<pauli::PauliTerm> terms;
  for (auto [a, b] : config.edges) {
    for (auto letter : {pauli::Pauli::X, pauli::Pauli::Y, pauli::Pauli::Z}) {
      pauli::PauliString p(n);
      p.set(a, letter);
      p.set(b, letter);
      terms.push_back({config.coupling, p});
    }
  }
  for (std::size_t q = 0; q < n; ++q) {
    pauli::PauliString p(n);
    p.set(q, pauli::Pauli::Z);
    terms.push_back({config.field, p});
  }
  return pauli::QubitHamiltonian(n, std::move(terms));
}

namespace {

template <typename State>
std::vector<double> z_values(const State& state) {
  std::vector<double> z;
  for (std::size_t q = 0; q < state.num_qubits(); ++q) {
    pauli::PauliString p(state.num_qubits());
    p.set(q, pauli::Pauli::Z);
    z.push_back(estimate::expectation(state, p));
  }
  return z;
}

}  // namespace

std::vector<double> z_expectations(const sim::DensityMatrix& rho) { return z_values(rho); }
std::vector<double> z_expectations(const sim::StateVector& psi) { return z_values(psi); }

double magnetization(const std::vector<double>& z) {
  if (z.empty()) return 0.0;
  double total = 0.0;
  for (double v : z) total += v;
  return total / static_cast<double>(z.size());
}

double magnetization(const sim::DensityMatrix& rho) {
  return magnetization(z_expectations(rho));
}

}  // namespace hevqe::experiments
