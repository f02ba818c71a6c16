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
#include <numbers>
#include <optional>
#include <vector>

#include <json.hpp>

#include "hevqe/common/random.hpp"

namespace hevqe::spsa {

struct Evaluation {
  double value = 0.0;
  double std_error = 0.0;
};

using Objective = std::function<Evaluation(const std::vector<double>&)>;

struct SpsaConfig {
  double c = 0.1;
  /// Step scale; calibrated from the objective when unset.
  std::optional<double> a;
  double alpha = 0.602;
  double gamma = 0.101;
  std::size_t max_updates = 250;
  /// Number of trailing (theta+, theta-) pairs averaged into theta_final.
  std::size_t averaging_window = 25;
  std::size_t calibration_samples = 25;
  double target_first_step = 2.0 * std::numbers::pi / 10.0;

  double c_k(std::size_t k) const;
  double a_k(std::size_t k) const;
  /// Throws InvalidArgument when an invariant fails.
  void validate() const;
};

nlohmann::json to_json(const SpsaConfig& config);

/// a = 2 target c / mean |E(theta + c D) - E(theta - c D)| over random sign
/// vectors D. Throws Error when the mean difference is below 1e-12.
double calibrate_a(const Objective& objective, const std::vector<double>& theta,
                   const SpsaConfig& config, Rng& rng);

struct Step {
  std::vector<double> next;
  std::vector<double> plus;
  std::vector<double> minus;
  std::vector<int> delta;
  Evaluation plus_eval;
  Evaluation minus_eval;
};

/// One update with a perturbation drawn from `rng`. Requires a calibrated or
/// explicit `a` and k >= 1.
Step spsa_iterate(const Objective& objective, const std::vector<double>& theta,
                  std::size_t k, const SpsaConfig& config, Rng& rng);
/// Same update with the perturbation given.
Step spsa_iterate(const Objective& objective, const std::vector<double>& theta,
                  std::size_t k, const SpsaConfig& config,
                  const std::vector<int>& delta);

struct IterationRecord {
  std::size_t k = 0;
  Evaluation plus;
  Evaluation minus;
};

struct OptimizationTrace {
  SpsaConfig config;
  std::uint64_t seed = 0;
  double a = 0.0;
  std::vector<IterationRecord> iterations;
  /// theta_k for k = 1..k_L + 1 when RunOptions::keep_thetas is set.
  std::vector<std::vector<double>> thetas;
  std::vector<double> theta_final;
  Evaluation final_energy;
  std::size_t final_shots = 0;
  std::size_t function_calls = 0;
  /// Lowest objective value seen over all calls, including calibration.
  double best_value = 0.0;
  /// Call count at which the objective first reached RunOptions::target.
  std::optional<std::size_t> calls_to_target;
  std::optional<double> wall_time;

  nlohmann::json to_json(const nlohmann::json& context = nlohmann::json::object()) const;
};

struct RunOptions {
  bool keep_thetas = false;
  bool record_wall_time = true;
  /// Shot count reported for the final estimate (0 for exact objectives).
  std::size_t final_shots = 0;
  /// Objective level whose first crossing is recorded in calls_to_target.
  std::optional<double> target;
  /// Called after every update, e.g. to flush a partial trace.
  std::function<void(const OptimizationTrace&)> on_iteration;
};

/// Calibration (when needed), k_L updates, averaging of the last
/// `averaging_window` perturbed pairs and one final evaluation.
OptimizationTrace run(const Objective& objective, const std::vector<double>& theta1,
                      const SpsaConfig& config, const Objective& final_objective,
                      Rng& rng, const RunOptions& options = {});

}  // namespace hevqe::spsa
