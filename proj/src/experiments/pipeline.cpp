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

#include "hevqe/experiments/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>

#include "hevqe/common/errors.hpp"
#include "hevqe/estimate/estimator.hpp"
#include "hevqe/experiments/models.hpp"
#include "hevqe/pauli/dense.hpp"

namespace hevqe::experiments {

std::string to_string(ObjectiveMode mode) {
  switch (mode) {
    case ObjectiveMode::noiseless_exact:
      return "noiseless_exact";
    case ObjectiveMode::noisy_exact:
      return "noisy_exact";
    case ObjectiveMode::noisy_sampled:
      return "noisy_sampled";
  }
  return "unknown";
}

ObjectiveMode objective_mode_from_string(std::string_view name) {
  if (name == "noiseless_exact") return ObjectiveMode::noiseless_exact;
  if (name == "noisy_exact") return ObjectiveMode::noisy_exact;
  if (name == "noisy_sampled") return ObjectiveMode::noisy_sampled;
  throw InvalidArgument("unknown objective mode '" + std::string(name) + "'");
}

spsa::Objective make_objective(const pauli::QubitHamiltonian& h,
                               const ansatz::AnsatzCircuit& circuit,
                               const SamplingConfig& sampling, std::size_t shots,
                               Rng rng) {
  if (h.num_qubits() != circuit.num_qubits()) {
    throw DimensionError("Hamiltonian has " + std::to_string(h.num_qubits()) +
                         " qubits but the ansatz has " +
                         std::to_string(circuit.num_qubits()));
  }
  if (sampling.mode == ObjectiveMode::noiseless_exact && !circuit.is_noiseless()) {
    throw InvalidArgument("noiseless objective requested with a noise model");
  }
  struct Context {
    pauli::QubitHamiltonian hamiltonian;
    ansatz::AnsatzCircuit circuit;
    pauli::TpbGrouping grouping;
    SamplingConfig sampling;
    std::size_t shots;
    Rng rng;
  };
  auto ctx = std::make_shared<Context>(Context{h, circuit, {}, sampling, shots, rng});
  if (sampling.mode == ObjectiveMode::noisy_sampled) {
    ctx->grouping = pauli::group_tpb(h);
  }
  return [ctx](const std::vector<double>& theta) {
    spsa::Evaluation eval;
    const bool pure = ctx->circuit.is_noiseless();
    if (ctx->sampling.mode == ObjectiveMode::noisy_sampled) {
      estimate::EnergyEstimate est =
          pure ? estimate::sampled_energy(ctx->circuit.prepare_pure_state(theta),
                                          ctx->hamiltonian, ctx->grouping, ctx->shots,
                                          ctx->sampling.readout, ctx->rng)
               : estimate::sampled_energy(ctx->circuit.prepare_state(theta),
                                          ctx->hamiltonian, ctx->grouping, ctx->shots,
                                          ctx->sampling.readout, ctx->rng);
      eval = {est.value, est.std_error};
    } else {
      eval.value = pure ? estimate::exact_energy(ctx->circuit.prepare_pure_state(theta),
                                                 ctx->hamiltonian)
                        : estimate::exact_energy(ctx->circuit.prepare_state(theta),
                                                 ctx->hamiltonian);
    }
    if (ctx->sampling.injected_noise > 0.0) {
      eval.value += ctx->sampling.injected_noise * ctx->rng.normal();
      eval.std_error = ctx->sampling.injected_noise;
    }
    return eval;
  };
}

std::uint64_t task_seed(std::uint64_t master, std::string_view scenario,
                        std::uint64_t point, std::uint64_t run) {
  std::uint64_t label = 1469598103934665603ULL;
  for (unsigned char ch : scenario) {
    label ^= ch;
    label *= 1099511628211ULL;
  }
  return mix_seed(mix_seed(mix_seed(master, label), point), run);
}

void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& task) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < threads; ++w) {
    workers.emplace_back([&]() {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          task(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& worker : workers) worker.join();
  if (failure) std::rethrow_exception(failure);
}

Percentiles percentiles(std::vector<double> values) {
  if (values.empty()) throw InvalidArgument("percentiles of an empty sample");
  std::sort(values.begin(), values.end());
  auto at = [&](double p) {
    const double h = p * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
  };
  Percentiles p;
  p.p5 = at(0.05);
  p.p25 = at(0.25);
  p.p50 = at(0.50);
  p.p75 = at(0.75);
  p.p95 = at(0.95);
  p.min = values.front();
  p.max = values.back();
  double total = 0.0;
  for (double v : values) total += v;
  p.mean = total / static_cast<double>(values.size());
  return p;
}

double PointResult::mean_error() const {
  if (runs.empty()) return 0.0;
  double total = 0.0;
  for (const auto& r : runs) total += r.error;
  return total / static_cast<double>(runs.size());
}

Percentiles PointResult::energy_stats() const {
  std::vector<double> v;
  for (const auto& r : runs) v.push_back(r.energy);
  return percentiles(std::move(v));
}

Percentiles PointResult::error_stats() const {
  std::vector<double> v;
  for (const auto& r : runs) v.push_back(r.error);
  return percentiles(std::move(v));
}

nlohmann::json to_json(const Percentiles& p) {
  return {{"p5", p.p5}, {"p25", p.p25}, {"p50", p.p50}, {"p75", p.p75},
          {"p95", p.p95}, {"min", p.min}, {"max", p.max}, {"mean", p.mean}};
}

namespace {

std::string format_number(double v) {
  char buffer[64];
  auto result = std::to_chars(buffer, buffer + sizeof buffer, v);
  return std::string(buffer, result.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

nlohmann::json ExperimentReport::to_json() const {
  nlohmann::json points_json = nlohmann::json::array();
  for (const auto& point : points) {
    nlohmann::json runs_json = nlohmann::json::array();
    for (const auto& r : point.runs) {
      nlohmann::json run{{"run", r.run},
                         {"seed", r.seed},
                         {"energy", r.energy},
                         {"std_error", r.std_error},
                         {"error", r.error},
                         {"function_calls", r.function_calls},
                         {"best_error", r.best_error},
                         {"calls_to_accuracy", r.calls_to_accuracy
                                                   ? nlohmann::json(*r.calls_to_accuracy)
                                                   : nlohmann::json(nullptr)},
                         {"z", r.z},
                         {"magnetization", r.magnetization},
                         {"theta_final", r.theta_final}};
      if (!r.trace.is_null()) run["trace"] = r.trace;
      runs_json.push_back(std::move(run));
    }
    nlohmann::json p{{"label", point.label},
                     {"parameter", point.parameter},
                     {"depth", point.depth},
                     {"reference", point.reference},
                     {"extra", point.extra},
                     {"runs", runs_json}};
    if (!point.runs.empty()) {
      p["stats"] = {{"energy", experiments::to_json(point.energy_stats())},
                    {"error", experiments::to_json(point.error_stats())},
                    {"mean_error", point.mean_error()}};
    }
    points_json.push_back(std::move(p));
  }
  return {{"scenario", scenario}, {"seed", seed}, {"extra", extra}, {"points", points_json}};
}

std::string ExperimentReport::to_csv() const {
  std::ostringstream out;
  out << "scenario,point,label,parameter,depth,run,seed,energy,std_error,reference,"
         "error,function_calls,magnetization\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& point = points[i];
    for (const auto& r : point.runs) {
      out << csv_field(scenario) << ',' << i << ',' << csv_field(point.label) << ','
          << format_number(point.parameter) << ',' << point.depth << ',' << r.run << ','
          << r.seed << ',' << format_number(r.energy) << ','
          << format_number(r.std_error) << ',' << format_number(point.reference) << ','
          << format_number(r.error) << ',' << r.function_calls << ','
          << format_number(r.magnetization) << '\n';
    }
  }
  return out.str();
}

ExperimentReport ExperimentReport::from_json(const nlohmann::json& j) {
  try {
    ExperimentReport report;
    report.scenario = j.at("scenario").get<std::string>();
    report.seed = j.at("seed").get<std::uint64_t>();
    report.extra = j.value("extra", nlohmann::json::object());
    for (const auto& p : j.at("points")) {
      PointResult point;
      point.label = p.at("label").get<std::string>();
      point.parameter = p.at("parameter").get<double>();
      point.depth = p.at("depth").get<std::size_t>();
      point.reference = p.at("reference").get<double>();
      point.extra = p.value("extra", nlohmann::json::object());
      for (const auto& r : p.at("runs")) {
        RunSummary run;
        run.run = r.at("run").get<std::size_t>();
        run.seed = r.at("seed").get<std::uint64_t>();
        run.energy = r.at("energy").get<double>();
        run.std_error = r.at("std_error").get<double>();
        run.error = r.at("error").get<double>();
        run.function_calls = r.at("function_calls").get<std::size_t>();
        run.best_error = r.value("best_error", run.error);
        if (r.contains("calls_to_accuracy") && !r.at("calls_to_accuracy").is_null()) {
          run.calls_to_accuracy = r.at("calls_to_accuracy").get<std::size_t>();
        }
        run.z = r.at("z").get<std::vector<double>>();
        run.magnetization = r.at("magnetization").get<double>();
        run.theta_final = r.at("theta_final").get<std::vector<double>>();
        if (r.contains("trace")) run.trace = r.at("trace");
        point.runs.push_back(std::move(run));
      }
      report.points.push_back(std::move(point));
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("<report>", 0, std::string("report schema mismatch: ") + e.what());
  }
}

namespace {

RunSummary run_once(const pauli::QubitHamiltonian& h, const PipelineConfig& config,
                    const ansatz::AnsatzCircuit& circuit, double reference,
                    std::uint64_t point, std::size_t run) {
  RunSummary summary;
  summary.run = run;
  summary.seed = task_seed(config.seed, config.scenario, point, run);
  const Rng root(summary.seed);
  Rng init_rng = root.split(0);
  Rng spsa_rng = root.split(1);

  spsa::SpsaConfig spsa_config = config.spsa;
  if (config.function_budget) {
    const std::size_t calibration =
        spsa_config.a ? 0 : 2 * spsa_config.calibration_samples;
    if (*config.function_budget < calibration + 2) {
      throw InvalidArgument("function budget too small for calibration and one update");
    }
    spsa_config.max_updates = (*config.function_budget - calibration) / 2;
    spsa_config.averaging_window =
        std::min(spsa_config.averaging_window, spsa_config.max_updates);
  }

  const auto theta1 = ansatz::initial_parameters(circuit.config(), init_rng);
  const auto objective =
      make_objective(h, circuit, config.sampling, config.sampling.shots, root.split(2));
  SamplingConfig final_sampling = config.sampling;
  final_sampling.injected_noise = 0.0;
  const auto final_objective = make_objective(h, circuit, final_sampling,
                                              config.sampling.final_shots, root.split(3));

  spsa::RunOptions options;
  options.record_wall_time = config.record_wall_time;
  options.target = reference + config.accuracy;
  options.final_shots = config.sampling.mode == ObjectiveMode::noisy_sampled
                            ? config.sampling.final_shots
                            : 0;
  if (config.on_progress) {
    options.on_iteration = [&](const spsa::OptimizationTrace& t) {
      config.on_progress(run, t);
    };
  }
  const auto trace =
      spsa::run(objective, theta1, spsa_config, final_objective, spsa_rng, options);

  summary.energy = trace.final_energy.value;
  summary.std_error = trace.final_energy.std_error;
  summary.error = summary.energy - reference;
  summary.function_calls = trace.function_calls;
  summary.best_error = trace.best_value - reference;
  summary.calls_to_accuracy = trace.calls_to_target;
  summary.theta_final = trace.theta_final;
  summary.z = circuit.is_noiseless()
                  ? z_expectations(circuit.prepare_pure_state(trace.theta_final))
                  : z_expectations(circuit.prepare_state(trace.theta_final));
  summary.magnetization = magnetization(summary.z);
  if (config.keep_traces) {
    summary.trace = trace.to_json({{"scenario", config.scenario},
                                   {"depth", circuit.config().depth},
                                   {"run", run}});
  }
  return summary;
}

}  // namespace

PointResult vqe_pipeline(const pauli::QubitHamiltonian& h, const PipelineConfig& config,
                         std::uint64_t point) {
  if (config.n_runs == 0) throw InvalidArgument("pipeline needs at least one run");
  PointResult result;
  result.reference = pauli::ground_energy(h);

  PipelineConfig current = config;
  const std::size_t rounds = config.escalation.enabled ? config.escalation.max_rounds : 1;
  nlohmann::json history = nlohmann::json::array();
  for (std::size_t round = 0; round < rounds; ++round) {
    const ansatz::AnsatzCircuit circuit(current.ansatz, current.noise);
    std::vector<RunSummary> runs(current.n_runs);
    parallel_for(current.n_runs, current.threads, [&](std::size_t r) {
      runs[r] = run_once(h, current, circuit, result.reference, point, r);
    });
    result.runs = std::move(runs);
    result.depth = current.ansatz.depth;
    const double mean_error = result.mean_error();
    history.push_back({{"depth", current.ansatz.depth},
                       {"max_updates", current.spsa.max_updates},
                       {"shots", current.sampling.shots},
                       {"final_shots", current.sampling.final_shots},
                       {"mean_error", mean_error}});
    if (!config.escalation.enabled || mean_error <= config.escalation.threshold) break;
    current.ansatz.depth += 1;
    const auto scale = [](std::size_t v, double f) {
      return static_cast<std::size_t>(std::llround(static_cast<double>(v) * f));
    };
    current.spsa.max_updates = scale(current.spsa.max_updates, config.escalation.update_factor);
    if (current.function_budget) {
      current.function_budget = scale(*current.function_budget, config.escalation.update_factor);
    }
    current.sampling.shots = scale(current.sampling.shots, config.escalation.shot_factor);
    current.sampling.final_shots =
        scale(current.sampling.final_shots, config.escalation.shot_factor);
  }
  if (config.escalation.enabled) result.extra["escalation"] = history;
  return result;
}

}  // namespace hevqe::experiments
