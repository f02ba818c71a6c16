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
#include <string>
#include <vector>

#include "hevqe/experiments/models.hpp"
#include "hevqe/experiments/pipeline.hpp"
#include "hevqe/fermion/tapering.hpp"

namespace hevqe::experiments {

/// Pipeline settings used by the depth scans: ideal ZZ entanglers at pi/2,
/// reduced rotation layers, noiseless exact energies and ten runs.
PipelineConfig scaling_defaults(std::size_t n_qubits, const ansatz::Topology& topology);

struct DepthSearchConfig {
  PipelineConfig pipeline;
  std::size_t min_depth = 0;
  std::size_t max_depth = 8;
  std::size_t function_budget = 50000;
  double threshold = kChemicalAccuracy;
};

struct DepthSearchResult {
  /// Empty when no depth up to max_depth met the threshold.
  std::optional<std::size_t> critical_depth;
  ExperimentReport report;
};

/// Scans depths upward and stops at the first one whose mean final error
/// over the configured runs is within the threshold.
DepthSearchResult critical_depth_search(const pauli::QubitHamiltonian& h,
                                        const DepthSearchConfig& config);

/// Concurrence produced by one entangler pair (control 0, target 1) acting on
/// the state with qubit 0 in |+> and qubit 1 in |0>.
double entangler_concurrence(const ansatz::EntanglerTemplate& entangler);

/// One point per (depth, phase). The template kind of `base.ansatz.entangler`
/// is kept and its phase replaced by each grid value. The report's `extra`
/// carries the concurrence curve over the same grid.
ExperimentReport entangler_phase_study(const pauli::QubitHamiltonian& h,
                                       const PipelineConfig& base,
                                       const std::vector<std::size_t>& depths,
                                       const std::vector<double>& phases);

/// Depolarizing strength xi applied to every rotation and coupling, with
/// energies evaluated exactly on the noisy state. xi = 0 runs noiseless.
ExperimentReport noise_scaling_study(const pauli::QubitHamiltonian& h,
                                     const PipelineConfig& base,
                                     const std::vector<std::size_t>& depths,
                                     const std::vector<double>& strengths);

struct SamplingSurrogate {
  std::size_t reference_states = 100;
  std::size_t reference_shots = 1000;
};

/// Mean grouped standard error over Haar-random states at the reference shot
/// count, using the readout model of `sampling`.
double reference_sampling_error(const pauli::QubitHamiltonian& h,
                                const SamplingConfig& sampling,
                                const SamplingSurrogate& surrogate, Rng& rng);

/// Gaussian noise of width eps * sqrt(reference_shots / S) added to exact
/// energies during optimization; final energies are exact. S = 0 stands for
/// unlimited shots (no noise).
ExperimentReport sampling_scaling_study(const pauli::QubitHamiltonian& h,
                                        const PipelineConfig& base,
                                        const std::vector<std::size_t>& shots,
                                        const SamplingSurrogate& surrogate = {});

struct Geometry {
  double bond_length = 0.0;
  std::string path;
};

/// Maps every integral file and runs the pipeline on it. The ansatz qubit
/// count follows the mapped Hamiltonian; the topology must fit it.
ExperimentReport dissociation_sweep(const std::vector<Geometry>& geometries,
                                    const fermion::MoleculeOptions& mapping,
                                    const PipelineConfig& base);

/// Heisenberg couplings J at fixed field, one point per (J, depth). Each
/// point's `extra` holds the exact ground-state magnetization.
ExperimentReport heisenberg_sweep(const HeisenbergConfig& model,
                                  const std::vector<double>& couplings,
                                  const std::vector<std::size_t>& depths,
                                  const PipelineConfig& base);

}  // namespace hevqe::experiments
