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

#include "hevqe/experiments/studies.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hevqe/common/errors.hpp"
#include "hevqe/estimate/estimator.hpp"
#include "hevqe/pauli/dense.hpp"
#include "hevqe/pauli/grouping.hpp"

namespace hevqe::experiments {

namespace {

std::string label(std::string_view key, double value, std::size_t depth) {
  std::ostringstream out;
  out << key << '=' << value << ",d=" << depth;
  return out.str();
}

}  // namespace

PipelineConfig scaling_defaults(std::size_t n_qubits, const ansatz::Topology& topology) {
  PipelineConfig config;
  config.ansatz.n_qubits = n_qubits;
  config.ansatz.topology = topology;
  config.ansatz.entangler = ansatz::EntanglerTemplate::ideal_zz(std::numbers::pi / 2);
  config.ansatz.variant = ansatz::Variant::reduced_zz;
  config.sampling.mode = ObjectiveMode::noiseless_exact;
  config.n_runs = 10;
  config.scenario = "depth_search";
  return config;
}

DepthSearchResult critical_depth_search(const pauli::QubitHamiltonian& h,
                                        const DepthSearchConfig& config) {
  if (config.min_depth > config.max_depth) {
    throw InvalidArgument("depth search needs min_depth <= max_depth");
  }
  DepthSearchResult result;
  result.report.scenario = config.pipeline.scenario;
  result.report.seed = config.pipeline.seed;
  result.report.extra = {{"function_budget", config.function_budget},
                         {"threshold", config.threshold}};
  PipelineConfig pipeline = config.pipeline;
  pipeline.function_budget = config.function_budget;
  pipeline.escalation.enabled = false;
  for (std::size_t d = config.min_depth; d <= config.max_depth; ++d) {
    pipeline.ansatz.depth = d;
    PointResult point = vqe_pipeline(h, pipeline, d);
    point.label = "d=" + std::to_string(d);
    point.parameter = static_cast<double>(d);
    const bool reached = point.mean_error() <= config.threshold;
    result.report.points.push_back(std::move(point));
    if (reached) {
      result.critical_depth = d;
      break;
    }
  }
  result.report.extra["critical_depth"] =
      result.critical_depth ? nlohmann::json(*result.critical_depth) : nlohmann::json(nullptr);
  return result;
}

double entangler_concurrence(const ansatz::EntanglerTemplate& entangler) {
  sim::StateVector psi(2);
  psi.amplitudes().setZero();
  psi.amplitudes()(0) = 1.0 / std::numbers::sqrt2;  // |00>
  psi.amplitudes()(2) = 1.0 / std::numbers::sqrt2;  // |10>
  sim::apply_unitary(psi, {0, 1}, sim::pair_unitary(entangler.terms()));
  return sim::concurrence(psi.to_density_matrix());
}

ExperimentReport entangler_phase_study(const pauli::QubitHamiltonian& h,
                                       const PipelineConfig& base,
                                       const std::vector<std::size_t>& depths,
                                       const std::vector<double>& phases) {
  ExperimentReport report;
  report.scenario = base.scenario;
  report.seed = base.seed;
  nlohmann::json curve = nlohmann::json::array();
  for (double phase : phases) {
    ansatz::EntanglerTemplate entangler = base.ansatz.entangler;
    entangler.phase = phase;
    curve.push_back({{"phase", phase}, {"concurrence", entangler_concurrence(entangler)}});
  }
  report.extra["concurrence"] = curve;

  std::uint64_t index = 0;
  for (std::size_t d : depths) {
    for (double phase : phases) {
      PipelineConfig config = base;
      config.ansatz.depth = d;
      config.ansatz.entangler.phase = phase;
      PointResult point = vqe_pipeline(h, config, index++);
      point.label = label("phase", phase, d);
      point.parameter = phase;
      report.points.push_back(std::move(point));
    }
  }
  return report;
}

ExperimentReport noise_scaling_study(const pauli::QubitHamiltonian& h,
                                     const PipelineConfig& base,
                                     const std::vector<std::size_t>& depths,
                                     const std::vector<double>& strengths) {
  ExperimentReport report;
  report.scenario = base.scenario;
  report.seed = base.seed;
  std::uint64_t index = 0;
  for (std::size_t d : depths) {
    for (double xi : strengths) {
      PipelineConfig config = base;
      config.ansatz.depth = d;
      if (xi == 0.0) {
        config.noise = sim::NoiseModel::none();
        config.sampling.mode = ObjectiveMode::noiseless_exact;
      } else {
        config.noise = sim::NoiseModel::depolarizing(xi);
        config.sampling.mode = ObjectiveMode::noisy_exact;
      }
      PointResult point = vqe_pipeline(h, config, index++);
      point.label = label("xi", xi, d);
      point.parameter = xi;
      report.points.push_back(std::move(point));
    }
  }
  return report;
}

double reference_sampling_error(const pauli::QubitHamiltonian& h,
                                const SamplingConfig& sampling,
                                const SamplingSurrogate& surrogate, Rng& rng) {
  if (surrogate.reference_states == 0) {
    throw InvalidArgument("sampling surrogate needs at least one reference state");
  }
  const pauli::TpbGrouping grouping = pauli::group_tpb(h);
  double total = 0.0;
  for (std::size_t k = 0; k < surrogate.reference_states; ++k) {
    const sim::StateVector psi = estimate::random_state(h.num_qubits(), rng);
    total += estimate::sampled_energy(psi, h, grouping, surrogate.reference_shots,
                                      sampling.readout, rng)
                 .std_error;
  }
  return total / static_cast<double>(surrogate.reference_states);
}

ExperimentReport sampling_scaling_study(const pauli::QubitHamiltonian& h,
                                        const PipelineConfig& base,
                                        const std::vector<std::size_t>& shots,
                                        const SamplingSurrogate& surrogate) {
  ExperimentReport report;
  report.scenario = base.scenario;
  report.seed = base.seed;
  Rng rng(task_seed(base.seed, base.scenario, ~std::uint64_t{0}, 0));
  const double eps = reference_sampling_error(h, base.sampling, surrogate, rng);
  report.extra = {{"reference_error", eps},
                  {"reference_states", surrogate.reference_states},
                  {"reference_shots", surrogate.reference_shots}};

  const ObjectiveMode exact_mode = base.noise.is_noiseless()
                                       ? ObjectiveMode::noiseless_exact
                                       : ObjectiveMode::noisy_exact;
  std::uint64_t index = 0;
  for (std::size_t s : shots) {
    PipelineConfig config = base;
    config.sampling.mode = exact_mode;
    config.sampling.injected_noise =
        s == 0 ? 0.0
               : eps * std::sqrt(static_cast<double>(surrogate.reference_shots) /
                                 static_cast<double>(s));
    PointResult point = vqe_pipeline(h, config, index++);
    point.label = label("S", static_cast<double>(s), config.ansatz.depth);
    point.parameter = static_cast<double>(s);
    point.extra["injected_noise"] = config.sampling.injected_noise;
    report.points.push_back(std::move(point));
  }
  return report;
}

ExperimentReport dissociation_sweep(const std::vector<Geometry>& geometries,
                                    const fermion::MoleculeOptions& mapping,
                                    const PipelineConfig& base) {
  ExperimentReport report;
  report.scenario = base.scenario;
  report.seed = base.seed;
  std::uint64_t index = 0;
  for (const Geometry& geometry : geometries) {
    const fermion::MoleculeMapping mapped =
        fermion::map_molecule(fermion::load_integrals_file(geometry.path), mapping);
    PipelineConfig config = base;
    config.ansatz.n_qubits = mapped.hamiltonian.num_qubits();
    PointResult point = vqe_pipeline(mapped.hamiltonian, config, index++);
    point.label = label("r", geometry.bond_length, config.ansatz.depth);
    point.parameter = geometry.bond_length;
    point.extra = {{"path", geometry.path},
                   {"qubits", mapped.hamiltonian.num_qubits()},
                   {"terms", mapped.hamiltonian.size()},
                   {"warnings", mapped.warnings}};
    report.points.push_back(std::move(point));
  }
  return report;
}

ExperimentReport heisenberg_sweep(const HeisenbergConfig& model,
                                  const std::vector<double>& couplings,
                                  const std::vector<std::size_t>& depths,
                                  const PipelineConfig& base) {
  ExperimentReport report;
  report.scenario = base.scenario;
  report.seed = base.seed;
  report.extra = {{"field", model.field}, {"edges", model.edges}};
  std::uint64_t index = 0;
  for (double j : couplings) {
    HeisenbergConfig point_model = model;
    point_model.coupling = j;
    const pauli::QubitHamiltonian h = heisenberg_hamiltonian(point_model);
    const pauli::GroundState ground = pauli::ground_state(h);
    const double exact_mz =
        magnetization(z_expectations(sim::StateVector(h.num_qubits(), ground.vector)));
    for (std::size_t d : depths) {
      PipelineConfig config = base;
      config.ansatz.n_qubits = model.n_qubits;
      config.ansatz.depth = d;
      PointResult point = vqe_pipeline(h, config, index++);
      point.label = label("J", j, d);
      point.parameter = j;
      point.extra["exact_magnetization"] = exact_mz;
      report.points.push_back(std::move(point));
    }
  }
  return report;
}

}  // namespace hevqe::experiments
