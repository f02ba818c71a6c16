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
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hevqe/common/errors.hpp"
#include "hevqe/experiments/models.hpp"
#include "hevqe/experiments/pipeline.hpp"
#include "hevqe/experiments/studies.hpp"
#include "hevqe/fermion/tapering.hpp"

namespace hevqe::cli {

/// Raised for configuration files that fail schema validation.
class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class Tier { smoke, paper };

std::string to_string(Tier tier);
Tier tier_from_string(std::string_view name);

struct ProblemSource {
  enum class Kind { integrals, hamiltonian, heisenberg };
  Kind kind = Kind::heisenberg;
  std::string path;
  fermion::MoleculeOptions mapping;
  experiments::HeisenbergConfig heisenberg;
};

/// Grids and limits for the sweep-style scenarios.
struct StudySettings {
  std::vector<std::size_t> depths{1};
  std::vector<double> phases;
  std::vector<double> strengths;
  std::vector<std::size_t> shots;
  std::vector<double> couplings;
  std::vector<experiments::Geometry> geometries;
  std::size_t min_depth = 0;
  std::size_t max_depth = 8;
  std::size_t function_budget = 50000;
  double threshold = experiments::kChemicalAccuracy;
  experiments::SamplingSurrogate surrogate;
};

struct RunConfig {
  std::string scenario = "optimize";
  ProblemSource problem;
  /// Topology name, resolved once the qubit count is known, or explicit
  /// layers of [control, target] pairs.
  std::string topology_name = "experimental";
  std::optional<ansatz::Topology> topology;
  ansatz::AnsatzConfig ansatz;
  sim::NoiseModel noise;
  /// The readout model is built from `readout` (one entry for every qubit or
  /// one per qubit); sampling.readout is ignored.
  experiments::SamplingConfig sampling;
  std::vector<sim::ReadoutQubit> readout;
  spsa::SpsaConfig spsa;
  std::size_t runs = 10;
  std::optional<std::size_t> function_budget;
  bool keep_traces = true;
  experiments::Escalation escalation;
  StudySettings study;
  std::uint64_t seed = 1;
  std::string output_dir = "out";
  Tier tier = Tier::smoke;
  /// 0 selects the available hardware parallelism.
  std::size_t threads = 0;
};

/// Scenario names accepted in the `scenario` field.
const std::vector<std::string>& scenario_names();

/// Validates and converts a configuration tree. Throws ConfigError naming the
/// offending key for unknown keys, wrong types or invalid values.
RunConfig parse_run_config(const nlohmann::json& j);
RunConfig load_run_config(const std::string& path);

/// Canonical tree with every default filled in.
nlohmann::json to_json(const RunConfig& config);

/// 16 hex digits of the FNV-1a hash of the canonical tree.
std::string config_hash(const RunConfig& config);

/// Caps runs, updates, budgets and depths for the smoke tier; the paper tier
/// is returned unchanged.
RunConfig apply_tier(RunConfig config);

/// Builds the Hamiltonian named by the problem section. Relative paths are
/// resolved against `base_dir`.
struct LoadedProblem {
  pauli::QubitHamiltonian hamiltonian;
  nlohmann::json info;
};
LoadedProblem load_problem(const ProblemSource& problem, const std::string& base_dir = "");

/// Pipeline settings for a problem with `n_qubits` qubits.
experiments::PipelineConfig pipeline_config(const RunConfig& config, std::size_t n_qubits);

}  // namespace hevqe::cli
