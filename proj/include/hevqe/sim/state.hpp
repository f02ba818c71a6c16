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

#include <Eigen/Dense>

namespace hevqe::sim {

/// Largest register the dense simulators accept.
inline constexpr std::size_t kMaxQubits = 10;

/// Basis order: qubit q is bit (n - 1 - q) of the row index, so qubit 0 is the
/// most significant bit, matching the Pauli text form.
class DensityMatrix {
 public:
  /// |0...0><0...0|. Throws ResourceError above kMaxQubits or for n = 0.
  explicit DensityMatrix(std::size_t n_qubits);
  DensityMatrix(std::size_t n_qubits, Eigen::MatrixXcd data);

  std::size_t num_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return std::size_t{1} << n_qubits_; }
  const Eigen::MatrixXcd& data() const { return data_; }
  Eigen::MatrixXcd& data() { return data_; }

  double trace() const { return data_.trace().real(); }
  double purity() const;

 private:
  std::size_t n_qubits_;
  Eigen::MatrixXcd data_;
};

DensityMatrix init_state(std::size_t n_qubits);

/// Pure-state counterpart used when no channel is present.
class StateVector {
 public:
  explicit StateVector(std::size_t n_qubits);
  StateVector(std::size_t n_qubits, Eigen::VectorXcd amplitudes);

  std::size_t num_qubits() const { return n_qubits_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Eigen::VectorXcd& amplitudes() { return amplitudes_; }

  DensityMatrix to_density_matrix() const;

 private:
  std::size_t n_qubits_;
  Eigen::VectorXcd amplitudes_;
};

/// Applies `op` (2^k x 2^k, first listed qubit most significant) to the
/// listed qubits. Throws DimensionError for bad indices or repeated qubits.
void apply_unitary(DensityMatrix& rho, const std::vector<std::size_t>& qubits,
                   const Eigen::MatrixXcd& op);
void apply_unitary(StateVector& psi, const std::vector<std::size_t>& qubits,
                   const Eigen::MatrixXcd& op);

/// rho -> sum_k E_k rho E_k^dagger on the listed qubits.
void apply_kraus(DensityMatrix& rho, const std::vector<std::size_t>& qubits,
                 const std::vector<Eigen::MatrixXcd>& kraus);

/// exp(-i theta/2 Z) and exp(-i theta/2 X), exp(-i theta/2 Y).
Eigen::Matrix2cd rz(double theta);
Eigen::Matrix2cd rx(double theta);
Eigen::Matrix2cd ry(double theta);

/// Z(theta1) X(theta2) Z(theta3); theta3 acts first.
Eigen::Matrix2cd euler_matrix(double theta1, double theta2, double theta3);

void apply_euler(DensityMatrix& rho, std::size_t qubit, double theta1,
                 double theta2, double theta3);
void apply_euler(StateVector& psi, std::size_t qubit, double theta1,
                 double theta2, double theta3);

/// Reduced state on `keep` (listed order becomes the new qubit order).
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<std::size_t>& keep);

/// Wootters concurrence of a two-qubit state.
double concurrence(const DensityMatrix& rho);

/// Von Neumann entropy in bits.
double entropy(const DensityMatrix& rho);

}  // namespace hevqe::sim
