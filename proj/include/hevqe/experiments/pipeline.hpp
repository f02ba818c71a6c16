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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hevqe/ansatz/ansatz.hpp"
#include "hevqe/pauli/grouping.hpp"
#include "hevqe/pauli/qubit_hamiltonian.hpp"
#include "hevqe/sim/measurement.hpp"
#include "hevqe/sim/noise.hpp"
#include "hevqe/spsa/spsa.hpp"

namespace hevqe::experiments {

inline constexpr double kChemicalAccuracy = 0.0016;

enum class ObjectiveMode { noiseless_exact, noisy_exact, noisy_sampled };

std::string to_string(ObjectiveMode mode);
ObjectiveMode objective_mode_from_string(std::string_view name);

struct SamplingConfig {
  ObjectiveMode mode = ObjectiveMode::noiseless_exact;
  std::size_t shots = 1000;
  std::size_t final_shots = 100000;
  sim::ReadoutModel readout;
  /// Standard deviation of Gaussian noise added to exact energies (used by
  /// the sampling-scaling surrogate).
  double injected_noise = 0.0;
};

/// Energy of the trial state as an SPSA objective. Exact modes return a zero
/// standard error; the sampled mode draws one shot record per TPB set.
spsa::Objective make_objective(const pauli::QubitHamiltonian& h,
                               const ansatz::AnsatzCircuit& circuit,
                               const SamplingConfig& sampling, std::size_t shots,
                               Rng rng);

/// Mixes the master seed with a scenario label, point and run index.
std::uint64_t task_seed(std::uint64_t master, std::string_view scenario,
                        std::uint64_t point, std::uint64_t run);

/// Runs `count` tasks on up to `threads` workers (0 = hardware concurrency).
/// The first exception thrown by a task is rethrown after all workers stop.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& task);

struct Escalation {
  bool enabled = false;
  std::size_t max_rounds = 3;
  double threshold = kChemicalAccuracy;
  double update_factor = 2.0;
  double shot_factor = 4.0;
};

struct PipelineConfig {
  ansatz::AnsatzConfig ansatz;
  sim::NoiseModel noise;
  SamplingConfig sampling;
  spsa::SpsaConfig spsa;
  std::size_t n_runs = 10;
  std::uint64_t seed = 1;
  std::string scenario = "optimize";
  /// When set, max_updates is derived so that calibration plus updates use
  /// at most this many objective calls.
  std::optional<std::size_t> function_budget;
  Escalation escalation;
  /// Error level used for RunSummary::calls_to_accuracy.
  double accuracy = kChemicalAccuracy;
  std::size_t threads = 1;
  bool keep_traces = false;
  bool record_wall_time = false;
  /// Receives every run's trace after each update (partial flushing).
  std::function<void(std::size_t run, const spsa::OptimizationTrace&)> on_progress;
};

struct RunSummary {
  std::size_t run = 0;
  std::uint64_t seed = 0;
  double energy = 0.0;
  double std_error = 0.0;
  double error = 0.0;
  std::size_t function_calls = 0;
  /// Lowest objective value seen during the run, minus the reference.
  double best_error = 0.0;
  /// First call whose objective value was within `accuracy` of the reference.
  std::optional<std::size_t> calls_to_accuracy;
  std::vector<double> z;
  double magnetization = 0.0;
  std::vector<double> theta_final;
  nlohmann::json trace;  // null unless traces are kept
};

struct Percentiles {
  double p5 = 0, p25 = 0, p50 = 0, p75 = 0, p95 = 0;
  double min = 0, max = 0, mean = 0;
};

/// Linear-interpolation percentiles of a non-empty sample.
Percentiles percentiles(std::vector<double> values);
nlohmann::json to_json(const Percentiles& p);

struct PointResult {
  std::string label;
  double parameter = 0.0;
  std::size_t depth = 0;
  double reference = 0.0;
  std::vector<RunSummary> runs;
  nlohmann::json extra = nlohmann::json::object();

  double mean_error() const;
  Percentiles energy_stats() const;
  Percentiles error_stats() const;
};

struct ExperimentReport {
  std::string scenario;
  std::uint64_t seed = 0;
  std::vector<PointResult> points;
  nlohmann::json extra = nlohmann::json::object();

  nlohmann::json to_json() const;
  /// Columns: scenario,point,label,parameter,depth,run,seed,energy,std_error,
  /// reference,error,function_calls,magnetization.
  std::string to_csv() const;
  static ExperimentReport from_json(const nlohmann::json& j);
};

/// n_runs independent optimizations of H with the configured ansatz, noise
/// and sampling. The reference is the dense ground energy.
PointResult vqe_pipeline(const pauli::QubitHamiltonian& h, const PipelineConfig& config,
                         std::uint64_t point = 0);

}  // namespace hevqe::experiments
