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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hevqe/cli/run_config.hpp"

namespace hevqe::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Command-line values that take precedence over the config file. The
/// environment variables HEVQE_OUTPUT_DIR and HEVQE_THREADS sit between the
/// two.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<Tier> tier;
  std::optional<std::string> output_dir;
  std::optional<std::size_t> threads;
};

/// Loads, validates and overrides a run configuration.
RunConfig resolve_config(const std::string& path, const Overrides& overrides);

/// Commands driven by a run configuration: optimize, sweep, depth-search,
/// phase-study, noise-scaling, sampling-scaling. Writes report.json,
/// report.csv and, for optimize, one trace file per run under the output
/// directory. A failure after the run starts writes partial_traces.json.
int cmd_run(const std::string& command, const std::string& config_path,
            const Overrides& overrides, std::ostream& out, std::ostream& err);

struct MapOptions {
  std::string integrals;
  std::string scheme = "parity";
  std::optional<int> electrons;
  std::size_t frozen_orbitals = 0;
  bool taper = true;
  int odd_z_half = 1;
  /// Written to stdout when empty.
  std::string output;
};

/// Maps an integral file to a qubit Hamiltonian file with a commented header.
int cmd_map(const MapOptions& options, std::ostream& out, std::ostream& err);

/// Writes the TPB grouping of a Hamiltonian file as JSON, with the error
/// bounds at `shots` readings per set.
int cmd_group(const std::string& hamiltonian, std::size_t shots, const std::string& output,
              std::ostream& out, std::ostream& err);

/// Aggregates report or trace files of a single scenario into report.csv and
/// summary.json (or CSV on stdout when no directory is given).
int cmd_report(const std::vector<std::string>& inputs, const std::string& output_dir,
               std::ostream& out, std::ostream& err);

}  // namespace hevqe::cli
