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
#include <cstdint>
#include <map>
#include <vector>

#include "hevqe/common/random.hpp"
#include "hevqe/pauli/pauli_string.hpp"
#include "hevqe/sim/state.hpp"

namespace hevqe::sim {

/// Deformed projectors of one qubit:
///   Pi_0 = eta0 I + eta1 Z,  Pi_1 = (1 - eta0) I - eta1 Z.
/// Reading 1 from |0> happens with probability eta0 - eta1 and reading 0 from
/// |1> with probability 1 - eta0 - eta1. Ideal readout is eta0 = eta1 = 1/2.
struct ReadoutQubit {
  double eta0 = 0.5;
  double eta1 = 0.5;

  double flip_from_zero() const { return eta0 - eta1; }
  double flip_from_one() const { return 1.0 - eta0 - eta1; }
  /// Affine map of the single-qubit readout: E[z_read] = offset + contrast z.
  double offset() const { return 1.0 - 2.0 * eta0; }
  double contrast() const { return 2.0 * eta1; }
  bool is_ideal() const { return eta0 == 0.5 && eta1 == 0.5; }
};

class ReadoutModel {
 public:
  /// Ideal readout on any register size.
  ReadoutModel() = default;
  /// One entry for all qubits or one per qubit. Throws InvalidArgument when
  /// a flip probability leaves [0, 1] or a contrast is not in (0, 1].
  explicit ReadoutModel(std::vector<ReadoutQubit> qubits);

  /// Symmetric assignment error: eta0 = 1/2, eta1 = 1/2 - error.
  static ReadoutModel symmetric(double error);

  const ReadoutQubit& qubit(std::size_t q) const;
  bool is_ideal() const;

 private:
  std::vector<ReadoutQubit> qubits_;
};

/// Outcomes of repeated measurement. Bit q of each outcome is the reading of
/// qubit q (the Pauli mask convention, not the state-index order).
struct ShotRecord {
  std::size_t n_qubits = 0;
  std::vector<std::uint64_t> outcomes;

  /// Histogram indexed by outcome mask.
  std::vector<std::uint64_t> counts() const;
};

/// Post-rotation that maps the +1 eigenstate of the basis letter to |0>.
Eigen::Matrix2cd post_rotation(pauli::Pauli basis);

/// Distribution of readings (indexed by outcome mask) after the post-rotations
/// for `basis` (I treated as Z) and the readout bit flips.
std::vector<double> measurement_probabilities(const DensityMatrix& rho,
                                              const pauli::PauliString& basis,
                                              const ReadoutModel& readout);
std::vector<double> measurement_probabilities(const StateVector& psi,
                                              const pauli::PauliString& basis,
                                              const ReadoutModel& readout);

/// Draws from a distribution indexed by outcome mask.
ShotRecord sample_outcomes(const std::vector<double>& probabilities,
                           std::size_t n_qubits, std::size_t shots, Rng& rng);

ShotRecord sample_shots(const DensityMatrix& rho, const pauli::PauliString& basis,
                        std::size_t shots, const ReadoutModel& readout, Rng& rng);

/// Per-shot assignment-corrected value of a term: product over its support of
/// (z_read - offset) / contrast with z_read = +-1.
double corrected_shot_value(const pauli::PauliString& term, std::uint64_t outcome,
                            const ReadoutModel& readout);

/// Corrects raw expectation values of Pauli strings. With asymmetric readout
/// (offset != 0) the correction of a string needs the raw values of all its
/// sub-strings on the same basis; missing ones raise InvalidArgument.
std::map<pauli::PauliString, double> correct_assignment(
    const std::map<pauli::PauliString, double>& raw, const ReadoutModel& readout);

}  // namespace hevqe::sim
