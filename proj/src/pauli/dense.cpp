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

#include "hevqe/pauli/dense.hpp"

#include <Eigen/Eigenvalues>

#include "hevqe/common/errors.hpp"

namespace hevqe::pauli {

namespace {

void add_pauli(Eigen::MatrixXcd& m, const PauliString& p,
               std::complex<double> weight) {
  const BasisAction action = basis_action(p);
  const auto dim = static_cast<std::uint64_t>(m.rows());
  for (std::uint64_t r = 0; r < dim; ++r) {
    m(static_cast<Eigen::Index>(r ^ action.flip_mask),
      static_cast<Eigen::Index>(r)) += weight * action.amplitude(r);
  }
}

void check_limit(std::size_t n, std::size_t limit) {
  if (n > limit) {
    throw ResourceError("dense representation of " + std::to_string(n) +
                        " qubits exceeds the limit of " +
                        std::to_string(limit));
  }
}

}  // namespace

Eigen::MatrixXcd to_matrix(const PauliString& p) {
  check_limit(p.num_qubits(), kDenseQubitLimit);
  const auto dim = Eigen::Index{1} << p.num_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  add_pauli(m, p, 1.0);
  return m;
}

Eigen::MatrixXcd to_matrix(const QubitHamiltonian& h, std::size_t qubit_limit) {
  check_limit(h.num_qubits(), qubit_limit);
  const auto dim = Eigen::Index{1} << h.num_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  m.diagonal().array() += h.identity_shift();
  for (const auto& term : h.terms()) add_pauli(m, term.string, term.coefficient);
  return m;
}

Eigen::VectorXd spectrum(const QubitHamiltonian& h, std::size_t qubit_limit) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      to_matrix(h, qubit_limit), Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double ground_energy(const QubitHamiltonian& h, std::size_t qubit_limit) {
  return spectrum(h, qubit_limit)(0);
}

GroundState ground_state(const QubitHamiltonian& h, std::size_t qubit_limit) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      to_matrix(h, qubit_limit));
  return {solver.eigenvalues()(0), solver.eigenvectors().col(0)};
}

}  // namespace hevqe::pauli
