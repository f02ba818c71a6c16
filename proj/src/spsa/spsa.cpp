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

#include "hevqe/spsa/spsa.hpp"

#include <chrono>
#include <cmath>
#include <deque>
#include <limits>
#include <string>

#include "hevqe/common/errors.hpp"

namespace hevqe::spsa {

double SpsaConfig::c_k(std::size_t k) const {
  return c / std::pow(static_cast<double>(k), gamma);
}

double SpsaConfig::a_k(std::size_t k) const {
  if (!a) throw InvalidArgument("step scale a is not set");
  return *a / std::pow(static_cast<double>(k), alpha);
}

void SpsaConfig::validate() const {
  if (!(c > 0.0)) throw InvalidArgument("SPSA c must be positive");
  if (a && !(*a > 0.0)) throw InvalidArgument("SPSA a must be positive");
  if (max_updates < 1) throw InvalidArgument("SPSA needs at least one update");
  if (averaging_window < 1 || averaging_window > max_updates) {
    throw InvalidArgument("averaging window must lie in 1..max_updates");
  }
  if (calibration_samples < 1) {
    throw InvalidArgument("calibration needs at least one sample");
  }
  if (!(target_first_step > 0.0)) {
    throw InvalidArgument("target first step must be positive");
  }
}

nlohmann::json to_json(const SpsaConfig& config) {
  nlohmann::json j{{"c", config.c},
                   {"alpha", config.alpha},
                   {"gamma", config.gamma},
                   {"max_updates", config.max_updates},
                   {"averaging_window", config.averaging_window},
                   {"calibration_samples", config.calibration_samples},
                   {"target_first_step", config.target_first_step}};
  j["a"] = config.a ? nlohmann::json(*config.a) : nlohmann::json(nullptr);
  return j;
}

namespace {

std::vector<int> draw_signs(std::size_t n, Rng& rng) {
  std::vector<int> delta(n);
  for (auto& d : delta) d = rng.sign();
  return delta;
}

std::vector<double> shifted(const std::vector<double>& theta,
                            const std::vector<int>& delta, double scale) {
  std::vector<double> out(theta);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += scale * delta[i];
  return out;
}

}  // namespace

double calibrate_a(const Objective& objective, const std::vector<double>& theta,
                   const SpsaConfig& config, Rng& rng) {
  double total = 0.0;
  for (std::size_t s = 0; s < config.calibration_samples; ++s) {
    const auto delta = draw_signs(theta.size(), rng);
    const double plus = objective(shifted(theta, delta, config.c)).value;
    const double minus = objective(shifted(theta, delta, -config.c)).value;
    total += std::abs(plus - minus);
  }
  const double mean = total / static_cast<double>(config.calibration_samples);
  if (!(mean >= 1e-12)) {
    throw Error("flat objective during calibration: mean |dE| = " +
                std::to_string(mean));
  }
  return 2.0 * config.target_first_step * config.c / mean;
}

Step spsa_iterate(const Objective& objective, const std::vector<double>& theta,
                  std::size_t k, const SpsaConfig& config,
                  const std::vector<int>& delta) {
  if (k < 1) throw InvalidArgument("SPSA iterations start at k = 1");
  if (delta.size() != theta.size()) {
    throw DimensionError("perturbation length differs from parameter count");
  }
  const double ck = config.c_k(k);
  const double ak = config.a_k(k);
  Step step;
  step.delta = delta;
  step.plus = shifted(theta, delta, ck);
  step.minus = shifted(theta, delta, -ck);
  step.plus_eval = objective(step.plus);
  step.minus_eval = objective(step.minus);
  const double slope = (step.plus_eval.value - step.minus_eval.value) / (2.0 * ck);
  step.next = theta;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    step.next[i] -= ak * slope * delta[i];
  }
  return step;
}

Step spsa_iterate(const Objective& objective, const std::vector<double>& theta,
                  std::size_t k, const SpsaConfig& config, Rng& rng) {
  return spsa_iterate(objective, theta, k, config, draw_signs(theta.size(), rng));
}

nlohmann::json OptimizationTrace::to_json(const nlohmann::json& context) const {
  nlohmann::json iterations_json = nlohmann::json::array();
  for (const auto& it : iterations) {
    iterations_json.push_back({{"k", it.k},
                               {"theta_plus_energy", it.plus.value},
                               {"theta_minus_energy", it.minus.value},
                               {"std_plus", it.plus.std_error},
                               {"std_minus", it.minus.std_error}});
  }
  nlohmann::json config_json = context;
  config_json["spsa"] = spsa::to_json(config);
  config_json["spsa"]["a"] = a;
  nlohmann::json j{{"config", config_json},
                   {"seed", seed},
                   {"iterations", iterations_json},
                   {"theta_final", theta_final},
                   {"E_f", final_energy.value},
                   {"E_f_std", final_energy.std_error},
                   {"S_f", final_shots},
                   {"function_calls", function_calls},
                   {"best_energy", best_value}};
  j["calls_to_target"] =
      calls_to_target ? nlohmann::json(*calls_to_target) : nlohmann::json(nullptr);
  j["wall_time"] = wall_time ? nlohmann::json(*wall_time) : nlohmann::json(nullptr);
  return j;
}

OptimizationTrace run(const Objective& objective, const std::vector<double>& theta1,
                      const SpsaConfig& config, const Objective& final_objective,
                      Rng& rng, const RunOptions& options) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  OptimizationTrace trace;
  std::size_t calls = 0;
  trace.best_value = std::numeric_limits<double>::infinity();
  const Objective counted = [&](const std::vector<double>& theta) {
    const Evaluation eval = objective(theta);
    ++calls;
    trace.best_value = std::min(trace.best_value, eval.value);
    if (options.target && !trace.calls_to_target && eval.value <= *options.target) {
      trace.calls_to_target = calls;
    }
    return eval;
  };

  trace.config = config;
  trace.seed = rng.seed();
  trace.final_shots = options.final_shots;
  SpsaConfig working = config;
  if (!working.a) working.a = calibrate_a(counted, theta1, working, rng);
  trace.a = *working.a;

  std::vector<double> theta = theta1;
  if (options.keep_thetas) trace.thetas.push_back(theta);
  std::deque<std::vector<double>> window;
  const std::size_t keep = 2 * config.averaging_window;
  for (std::size_t k = 1; k <= config.max_updates; ++k) {
    Step step = spsa_iterate(counted, theta, k, working, rng);
    trace.iterations.push_back({k, step.plus_eval, step.minus_eval});
    window.push_back(std::move(step.plus));
    window.push_back(std::move(step.minus));
    while (window.size() > keep) window.pop_front();
    theta = std::move(step.next);
    if (options.keep_thetas) trace.thetas.push_back(theta);
    trace.function_calls = calls;
    if (options.on_iteration) options.on_iteration(trace);
  }

  trace.theta_final.assign(theta.size(), 0.0);
  for (const auto& v : window) {
    for (std::size_t i = 0; i < v.size(); ++i) trace.theta_final[i] += v[i];
  }
  for (auto& v : trace.theta_final) v /= static_cast<double>(window.size());
  trace.final_energy = final_objective(trace.theta_final);
  trace.function_calls = calls;
  if (options.record_wall_time) {
    trace.wall_time = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start).count();
  }
  return trace;
}

}  // namespace hevqe::spsa
