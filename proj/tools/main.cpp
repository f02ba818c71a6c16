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

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hevqe/cli/commands.hpp"

namespace {

struct CommonFlags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> tier;
  std::optional<std::string> out;
  std::optional<std::size_t> threads;
};

void add_run_flags(CLI::App& command, CommonFlags& flags) {
  command.add_option("--config", flags.config, "Run configuration (JSON)")->required();
  command.add_option("--seed", flags.seed, "Master seed");
  command.add_option("--tier", flags.tier, "smoke or paper")
      ->check(CLI::IsMember({"smoke", "paper"}));
  command.add_option("--out", flags.out, "Output directory");
  command.add_option("--threads", flags.threads, "Worker threads (0 = all cores)");
}

hevqe::cli::Overrides overrides(const CommonFlags& flags) {
  hevqe::cli::Overrides o;
  o.seed = flags.seed;
  if (flags.tier) o.tier = hevqe::cli::tier_from_string(*flags.tier);
  o.output_dir = flags.out;
  o.threads = flags.threads;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hardware-efficient VQE simulation toolkit"};
  app.require_subcommand(1);

  const std::vector<std::pair<std::string, std::string>> run_commands{
      {"optimize", "Run repeated VQE optimizations"},
      {"sweep", "Dissociation or Heisenberg coupling sweep"},
      {"depth-search", "Smallest depth reaching the accuracy threshold"},
      {"phase-study", "Energy error against entangler phase"},
      {"noise-scaling", "Energy error against depolarizing strength"},
      {"sampling-scaling", "Energy error against shot count"}};
  CommonFlags run_flags;
  for (const auto& [name, help] : run_commands) {
    add_run_flags(*app.add_subcommand(name, help), run_flags);
  }

  hevqe::cli::MapOptions map;
  std::string map_config;
  CommonFlags map_flags;
  auto* map_cmd = app.add_subcommand("map", "Map an integral file to a qubit Hamiltonian");
  map_cmd->add_option("integrals", map.integrals, "FCIDUMP integral file");
  map_cmd->add_option("--scheme", map.scheme, "jordan_wigner, parity or binary_tree");
  map_cmd->add_option("--electrons", map.electrons, "Electron count (default: file NELEC)");
  map_cmd->add_option("--freeze", map.frozen_orbitals, "Lowest dressed orbitals to freeze");
  map_cmd->add_flag("!--no-taper", map.taper, "Keep the symmetry qubits");
  map_cmd->add_option("--odd-z-half", map.odd_z_half, "Sector choice for odd electron counts")
      ->check(CLI::IsMember({-1, 1}));
  map_cmd->add_option("--out", map.output, "Output file (default: stdout)");
  map_cmd->add_option("--config", map_config, "Run configuration with a map scenario");
  map_cmd->add_option("--seed", map_flags.seed, "Master seed");

  std::string group_input;
  std::string group_out;
  std::size_t group_shots = 1000;
  std::string group_config;
  auto* group_cmd = app.add_subcommand("group", "Tensor-product-basis grouping of a Hamiltonian");
  group_cmd->add_option("hamiltonian", group_input, "Qubit Hamiltonian text file");
  group_cmd->add_option("--shots", group_shots, "Readings per set for the error bounds");
  group_cmd->add_option("--out", group_out, "Output file (default: stdout)");
  group_cmd->add_option("--config", group_config, "Run configuration with a group scenario");

  std::vector<std::string> report_inputs;
  std::string report_out;
  auto* report_cmd = app.add_subcommand("report", "Aggregate report or trace files");
  report_cmd->add_option("inputs", report_inputs, "report.json or trace files")->required();
  report_cmd->add_option("--out", report_out, "Output directory (default: CSV on stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hevqe::cli::kExitUsage;
  }

  try {
    for (const auto& [name, help] : run_commands) {
      if (app.got_subcommand(name)) {
        return hevqe::cli::cmd_run(name, run_flags.config, overrides(run_flags), std::cout,
                                   std::cerr);
      }
    }
    if (app.got_subcommand(map_cmd)) {
      if (!map_config.empty()) {
        return hevqe::cli::cmd_run("map", map_config, overrides(map_flags), std::cout,
                                   std::cerr);
      }
      if (map.integrals.empty()) {
        std::cerr << "error: map needs an integral file or --config\n";
        return hevqe::cli::kExitUsage;
      }
      return hevqe::cli::cmd_map(map, std::cout, std::cerr);
    }
    if (app.got_subcommand(group_cmd)) {
      if (!group_config.empty()) {
        return hevqe::cli::cmd_run("group", group_config, {}, std::cout, std::cerr);
      }
      if (group_input.empty()) {
        std::cerr << "error: group needs a Hamiltonian file or --config\n";
        return hevqe::cli::kExitUsage;
      }
      return hevqe::cli::cmd_group(group_input, group_shots, group_out, std::cout, std::cerr);
    }
    return hevqe::cli::cmd_report(report_inputs, report_out, std::cout, std::cerr);
  } catch (const hevqe::cli::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return hevqe::cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return hevqe::cli::kExitFailure;
  }
}
