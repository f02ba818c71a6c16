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
#include <vector>

#include <Eigen/Dense>

#include "hevqe/sim/state.hpp"

namespace hevqe::sim {

/// Relaxation times of one qubit in seconds; infinity disables a process.
struct Coherence {
  double t1 = 30e-6;
  double t2_star = 20e-6;

  /// Pure dephasing time from 1/T_phi = 1/T2* - 1/(2 T1).
  double t_phi() const;
};

struct NoiseModel {
  enum class Kind { none, thermal, depolarizing };

  Kind kind = Kind::none;
  /// One entry applies to every qubit; otherwise one entry per qubit.
  std::vector<Coherence> coherence;
  /// Duration of a layer of single-qubit rotations.
  double single_qubit_duration = 100e-9;
  /// Overrides the entangler layer durations when set.
  std::optional<double> entangler_duration;
  /// Per-gate depolarizing strength.
  double depolarizing_strength = 0.0;

  static NoiseModel none();
  static NoiseModel thermal(double t1, double t2_star,
                            std::optional<double> entangler_duration = {});
  static NoiseModel depolarizing(double strength);

  bool is_noiseless() const;
  const Coherence& qubit(std::size_t q) const;
  /// Throws InvalidArgument for T2* > 2 T1, non-positive times, xi outside
  /// [0, 1] or a per-qubit table of the wrong length.
  void validate(std::size_t n_qubits) const;
};

std::vector<Eigen::MatrixXcd> amplitude_damping_kraus(double tau, double t1);
std::vector<Eigen::MatrixXcd> dephasing_kraus(double tau, double t_phi);
std::vector<Eigen::MatrixXcd> depolarizing_kraus(std::size_t n_sites, double xi);

/// Amplitude damping then dephasing on every qubit for a time tau.
void apply_thermal_noise(DensityMatrix& rho, double tau, const NoiseModel& model);

/// One- or two-site depolarizing channel:
///   (1 - xi) rho + xi/(4^k - 1) sum over non-identity Paulis P rho P.
void apply_depolarizing(DensityMatrix& rho, const std::vector<std::size_t>& sites,
                        double xi);

}  // namespace hevqe::sim
