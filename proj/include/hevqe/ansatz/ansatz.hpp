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
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hevqe/common/random.hpp"
#include "hevqe/sim/entangler.hpp"
#include "hevqe/sim/noise.hpp"
#include "hevqe/sim/state.hpp"

namespace hevqe::ansatz {

using Edge = std::pair<std::size_t, std::size_t>;  // (control, target)

/// Directed two-qubit couplings grouped into layers that run in parallel.
struct Topology {
  std::string name = "custom";
  std::vector<std::vector<Edge>> layers;

  std::size_t num_edges() const;

  static Topology experimental_2q();
  static Topology experimental_4q();
  static Topology experimental_6q();
  /// Every pair (i < j) with i as control, scheduled by the round-robin
  /// tournament rule into n - 1 (or n for odd n) layers of disjoint pairs.
  static Topology all_to_all(std::size_t n_qubits);
  /// Directed edges with explicit layer indices.
  static Topology custom(const std::vector<std::pair<Edge, std::size_t>>& edges);
  /// "experimental_2q", "experimental_4q", "experimental_6q", "all_to_all",
  /// or "experimental" for the device layout matching n_qubits.
  static Topology by_name(std::string_view name, std::size_t n_qubits);
};

/// Terms assigned to every coupling of the topology.
struct EntanglerTemplate {
  enum class Kind { cr_measured, ideal_zx, ideal_zz };

  Kind kind = Kind::cr_measured;
  /// ZX or ZZ angle for the ideal kinds. For cr_measured, the phase fixes the
  /// ZX angle and rescales the other measured terms by their rate ratios;
  /// without it the rates are integrated over the layer duration.
  std::optional<double> phase = std::numbers::pi / 4;
  double layer_duration = 150e-9;

  static EntanglerTemplate cr_measured(
      std::optional<double> phase = std::numbers::pi / 4);
  static EntanglerTemplate ideal_zx(double phase);
  static EntanglerTemplate ideal_zz(double phase);

  sim::PairTerms terms() const;
};

std::string to_string(EntanglerTemplate::Kind kind);
EntanglerTemplate::Kind entangler_kind_from_string(std::string_view name);

enum class Variant { full_euler, reduced_zz };

std::string to_string(Variant variant);
Variant variant_from_string(std::string_view name);

struct AnsatzConfig {
  std::size_t n_qubits = 2;
  std::size_t depth = 1;
  Topology topology = Topology::experimental_2q();
  EntanglerTemplate entangler;
  Variant variant = Variant::full_euler;

  /// Throws InvalidArgument or DimensionError for inconsistent settings.
  void validate() const;
};

/// Which rotation a parameter drives.
enum class Axis { z_outer, x, z_inner };

struct ParameterSlot {
  std::size_t layer = 0;
  std::size_t qubit = 0;
  Axis axis = Axis::x;
};

/// N(3d + 2) angles for full_euler and 2N(d + 1) for reduced_zz.
std::size_t parameter_count(const AnsatzConfig& config);

/// Canonical ordering: layer-major, qubit-minor. Layer 0 and every reduced
/// layer store (X, Z_outer) per qubit; full layers store
/// (Z_outer, X, Z_inner), where the rotation is Z_outer X Z_inner.
std::vector<ParameterSlot> parameter_layout(const AnsatzConfig& config);

/// Z angles drawn from N(0, 1); X angles set to pi/2.
std::vector<double> initial_parameters(const AnsatzConfig& config, Rng& rng);

std::string parameters_to_json(const std::vector<double>& theta);
/// Throws ParseError for malformed input.
std::vector<double> parameters_from_json(std::string_view text);

/// Compiled trial-state circuit:
///   |0> -> R_0 -> (U_ENT -> R_i) x d
/// with noise after each rotation layer and after each entangler step.
class AnsatzCircuit {
 public:
  AnsatzCircuit(AnsatzConfig config, sim::NoiseModel noise = sim::NoiseModel::none());

  const AnsatzConfig& config() const { return config_; }
  const sim::NoiseModel& noise() const { return noise_; }
  std::size_t num_parameters() const { return n_params_; }
  std::size_t num_qubits() const { return config_.n_qubits; }
  /// True when prepare_pure_state yields the same state as prepare_state.
  bool is_noiseless() const { return noise_.is_noiseless(); }

  sim::DensityMatrix prepare_state(const std::vector<double>& theta) const;
  sim::StateVector prepare_pure_state(const std::vector<double>& theta) const;

 private:
  template <typename State>
  void apply_rotation_layer(State& state, const std::vector<double>& theta,
                            std::size_t layer) const;
  void check_length(const std::vector<double>& theta) const;

  AnsatzConfig config_;
  sim::NoiseModel noise_;
  sim::CompiledEntangler entangler_;
  std::size_t n_params_;
  double entangler_duration_;
};

sim::DensityMatrix prepare_state(const AnsatzConfig& config,
                                 const std::vector<double>& theta,
                                 const sim::NoiseModel& noise);

}  // namespace hevqe::ansatz
