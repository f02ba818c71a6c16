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

#include "hevqe/common/random.hpp"
#include "hevqe/pauli/grouping.hpp"
#include "hevqe/pauli/qubit_hamiltonian.hpp"
#include "hevqe/sim/measurement.hpp"
#include "hevqe/sim/state.hpp"

namespace hevqe::estimate {

double expectation(const sim::DensityMatrix& rho, const pauli::PauliString& p);
double expectation(const sim::StateVector& psi, const pauli::PauliString& p);

/// tr(rho H) including the identity shift.
double exact_energy(const sim::DensityMatrix& rho, const pauli::QubitHamiltonian& h);
double exact_energy(const sim::StateVector& psi, const pauli::QubitHamiltonian& h);

struct EnergyEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t shots_per_set = 0;
  std::size_t num_sets = 0;
  /// Assignment-corrected mean of each term, aligned with H.terms().
  std::vector<double> term_means;
  /// Estimated variance of the summed energy per shot (the grouped variance
  /// with within-set covariances).
  double grouped_variance = 0.0;
};

/// Finite-shot estimator: one joint record of `shots` readings per TPB set,
/// each drawn from its own substream of a seed taken from `rng`. Per-shot
/// values are assignment-corrected before averaging; covariances use 1/(S-1).
/// Throws InvalidArgument for fewer than two shots.
EnergyEstimate sampled_energy(const sim::DensityMatrix& rho,
                              const pauli::QubitHamiltonian& h,
                              const pauli::TpbGrouping& grouping,
                              std::size_t shots, const sim::ReadoutModel& readout,
                              Rng& rng);
EnergyEstimate sampled_energy(const sim::StateVector& psi,
                              const pauli::QubitHamiltonian& h,
                              const pauli::TpbGrouping& grouping,
                              std::size_t shots, const sim::ReadoutModel& readout,
                              Rng& rng);

struct ErrorBounds {
  /// sqrt(T h_max^2 / S) for S shots on every term separately.
  double ungrouped = 0.0;
  /// sqrt(A h_max^2 (T + A s_max^2) / (T S)) at the same total budget.
  double grouped = 0.0;
};

ErrorBounds error_bound(const pauli::QubitHamiltonian& h,
                        const pauli::TpbGrouping& grouping, std::size_t shots);

struct VarianceComparison {
  /// Squared standard error of the energy per random state.
  std::vector<double> grouped;
  std::vector<double> ungrouped;
  std::size_t shots_per_term = 0;
};

/// For each Haar-random pure state, the grouped estimator uses `shots` per
/// set and the ungrouped one round(shots A / T) (at least 2) per term, so
/// both spend about A * shots readings.
VarianceComparison variance_comparison_experiment(const pauli::QubitHamiltonian& h,
                                                  std::size_t n_states,
                                                  std::size_t shots, Rng& rng);

/// Haar-random pure state.
sim::StateVector random_state(std::size_t n_qubits, Rng& rng);

}  // namespace hevqe::estimate
