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

#include "hevqe/cli/commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

#include "hevqe/estimate/estimator.hpp"
#include "hevqe/experiments/studies.hpp"
#include "hevqe/fermion/fermion_hamiltonian.hpp"
#include "hevqe/pauli/grouping.hpp"

namespace hevqe::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr std::size_t kSnapshotInterval = 25;

std::optional<std::string> env(const char* name) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') return std::nullopt;
  return std::string(value);
}

json provenance(const RunConfig& config) {
  json canonical = to_json(config);
  canonical.erase("output_dir");
  canonical.erase("threads");
  return {{"config_hash", config_hash(config)}, {"seed", config.seed}, {"config", canonical}};
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write '" + path.string() + "'");
  file << text;
  if (!file) throw Error("failed while writing '" + path.string() + "'");
}

std::string csv_with_header(const std::string& csv, const RunConfig& config) {
  return "# config_hash=" + config_hash(config) + " seed=" + std::to_string(config.seed) +
         "\n" + csv;
}

bool command_accepts(const std::string& command, const std::string& scenario) {
  if (command == "sweep") return scenario == "sweep" || scenario == "heisenberg";
  return command == scenario;
}

/// Keeps a recent copy of every run's trace so a failure can be written out.
class PartialTraces {
 public:
  void update(std::size_t run, const spsa::OptimizationTrace& trace) {
    const std::size_t n = trace.iterations.size();
    if (n != 1 && n % kSnapshotInterval != 0) return;
    json snapshot = trace.to_json({{"run", run}, {"partial", true}});
    std::lock_guard lock(mutex_);
    traces_[run] = std::move(snapshot);
  }

  json to_json() const {
    std::lock_guard lock(mutex_);
    json out = json::object();
    for (const auto& [run, trace] : traces_) out[std::to_string(run)] = trace;
    return out;
  }

 private:
  mutable std::mutex mutex_;
  std::map<std::size_t, json> traces_;
};

void print_point_summary(const experiments::PointResult& point, std::ostream& out) {
  out << std::setprecision(10);
  for (const auto& r : point.runs) {
    out << "  run " << r.run << ": E_f = " << r.energy << " +/- " << r.std_error
        << "  error = " << r.error << "  calls = " << r.function_calls << '\n';
  }
  const auto stats = point.energy_stats();
  const double mean_error = point.mean_error();
  out << "  reference E_G = " << point.reference << '\n'
      << "  mean E_f = " << stats.mean << "  median E_f = " << stats.p50 << '\n'
      << "  mean error = " << mean_error << " Hartree\n"
      << "  chemical accuracy (" << experiments::kChemicalAccuracy << "): "
      << (mean_error <= experiments::kChemicalAccuracy ? "reached" : "not reached") << '\n';
}

json run_scenario(const std::string& scenario, const RunConfig& config,
                  const LoadedProblem& problem, const std::string& base_dir,
                  const fs::path& out_dir, PartialTraces& partial, std::ostream& out) {
  const auto& h = problem.hamiltonian;
  experiments::PipelineConfig pipeline = pipeline_config(config, h.num_qubits());
  pipeline.on_progress = [&partial](std::size_t run, const spsa::OptimizationTrace& t) {
    partial.update(run, t);
  };
  experiments::ExperimentReport report;
  const auto& study = config.study;

  if (scenario == "optimize") {
    report.scenario = scenario;
    report.seed = config.seed;
    auto point = experiments::vqe_pipeline(h, pipeline);
    point.label = "d=" + std::to_string(point.depth);
    point.parameter = static_cast<double>(point.depth);
    out << "optimize: " << h.num_qubits() << " qubits, " << h.size() << " terms, "
        << config.runs << " runs\n";
    print_point_summary(point, out);
    if (config.keep_traces) {
      for (const auto& r : point.runs) {
        json trace = r.trace;
        trace["provenance"] = provenance(config);
        std::ostringstream name;
        name << "run_" << std::setw(3) << std::setfill('0') << r.run << ".json";
        write_file(out_dir / "traces" / name.str(), trace.dump(2) + "\n");
      }
    }
    report.points.push_back(std::move(point));
  } else if (scenario == "heisenberg") {
    if (study.couplings.empty()) throw ConfigError("study.couplings is empty");
    if (config.problem.kind != ProblemSource::Kind::heisenberg) {
      throw ConfigError("the heisenberg scenario needs a heisenberg problem");
    }
    report = experiments::heisenberg_sweep(config.problem.heisenberg, study.couplings,
                                           study.depths, pipeline);
  } else if (scenario == "sweep") {
    if (study.geometries.empty()) throw ConfigError("study.geometries is empty");
    std::vector<experiments::Geometry> geometries = study.geometries;
    for (auto& g : geometries) {
      if (!base_dir.empty() && fs::path(g.path).is_relative()) {
        g.path = (fs::path(base_dir) / g.path).string();
      }
    }
    report = experiments::dissociation_sweep(geometries, config.problem.mapping, pipeline);
  } else if (scenario == "depth-search") {
    experiments::DepthSearchConfig search;
    search.pipeline = pipeline;
    search.min_depth = study.min_depth;
    search.max_depth = study.max_depth;
    search.function_budget = study.function_budget;
    search.threshold = study.threshold;
    auto result = experiments::critical_depth_search(h, search);
    out << "critical depth: "
        << (result.critical_depth ? std::to_string(*result.critical_depth) : "not found")
        << '\n';
    report = std::move(result.report);
  } else if (scenario == "phase-study") {
    if (study.phases.empty()) throw ConfigError("study.phases is empty");
    report = experiments::entangler_phase_study(h, pipeline, study.depths, study.phases);
  } else if (scenario == "noise-scaling") {
    if (study.strengths.empty()) throw ConfigError("study.strengths is empty");
    report = experiments::noise_scaling_study(h, pipeline, study.depths, study.strengths);
  } else if (scenario == "sampling-scaling") {
    if (study.shots.empty()) throw ConfigError("study.shots is empty");
    report = experiments::sampling_scaling_study(h, pipeline, study.shots, study.surrogate);
  } else {
    throw ConfigError("scenario '" + scenario + "' is not a run scenario");
  }

  if (scenario != "optimize") {
    for (const auto& point : report.points) {
      out << point.label << ": mean error " << point.mean_error() << '\n';
    }
  }
  json j = report.to_json();
  j["problem"] = problem.info;
  j["provenance"] = provenance(config);
  write_file(out_dir / "report.json", j.dump(2) + "\n");
  write_file(out_dir / "report.csv", csv_with_header(report.to_csv(), config));
  return j;
}

json grouping_json(const pauli::QubitHamiltonian& h, std::size_t shots) {
  const auto grouping = pauli::group_tpb(h);
  json sets = json::array();
  for (std::size_t s = 0; s < grouping.num_sets(); ++s) {
    json terms = json::array();
    for (std::size_t index : grouping.sets[s]) {
      terms.push_back({{"string", h.terms()[index].string.str()},
                       {"coefficient", h.terms()[index].coefficient}});
    }
    sets.push_back({{"basis", grouping.bases[s].str()}, {"terms", terms}});
  }
  const auto bounds = estimate::error_bound(h, grouping, shots);
  return {{"qubits", h.num_qubits()},
          {"terms", h.size()},
          {"num_sets", grouping.num_sets()},
          {"largest_set", grouping.largest_set()},
          {"shots_per_set", shots},
          {"error_bound", {{"ungrouped", bounds.ungrouped}, {"grouped", bounds.grouped}}},
          {"sets", sets}};
}

std::string map_header(const fermion::MoleculeMapping& mapped,
                       fermion::EncodingScheme scheme, std::size_t tpb_sets) {
  std::ostringstream out;
  out << "# scheme: " << fermion::to_string(scheme) << '\n';
  out << "# active_electrons: " << mapped.active_electrons << '\n';
  if (mapped.sector) {
    out << "# sector: z_half=" << mapped.sector->z_half
        << " z_full=" << mapped.sector->z_full << '\n';
  } else {
    out << "# sector: untapered\n";
  }
  out << "# qubits: " << mapped.hamiltonian.num_qubits() << '\n';
  out << "# terms: " << mapped.hamiltonian.size() << '\n';
  out << "# tpb_sets: " << tpb_sets << '\n';
  for (const auto& warning : mapped.warnings) out << "# warning: " << warning << '\n';
  return out.str();
}

}  // namespace

RunConfig resolve_config(const std::string& path, const Overrides& overrides) {
  RunConfig config = load_run_config(path);
  if (auto dir = env("HEVQE_OUTPUT_DIR")) config.output_dir = *dir;
  if (auto threads = env("HEVQE_THREADS")) {
    try {
      config.threads = std::stoul(*threads);
    } catch (const std::exception&) {
      throw ConfigError("HEVQE_THREADS must be a non-negative integer");
    }
  }
  if (overrides.seed) config.seed = *overrides.seed;
  if (overrides.tier) config.tier = *overrides.tier;
  if (overrides.output_dir) config.output_dir = *overrides.output_dir;
  if (overrides.threads) config.threads = *overrides.threads;
  return apply_tier(config);
}

int cmd_run(const std::string& command, const std::string& config_path,
            const Overrides& overrides, std::ostream& out, std::ostream& err) {
  RunConfig config;
  LoadedProblem problem{pauli::QubitHamiltonian(1, {}), {}};
  const std::string base_dir = fs::path(config_path).parent_path().string();
  try {
    config = resolve_config(config_path, overrides);
    if (!command_accepts(command, config.scenario)) {
      throw ConfigError("command '" + command + "' cannot run scenario '" + config.scenario +
                        "'");
    }
    if (config.scenario == "sweep") {
      // Every geometry shares the qubit count of the first one.
      if (config.study.geometries.empty()) throw ConfigError("study.geometries is empty");
      ProblemSource first = config.problem;
      first.kind = ProblemSource::Kind::integrals;
      first.path = config.study.geometries.front().path;
      problem = load_problem(first, base_dir);
    } else {
      problem = load_problem(config.problem, base_dir);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const fs::path out_dir(config.output_dir);
  PartialTraces partial;
  try {
    if (config.scenario == "map") {
      write_file(out_dir / "hamiltonian.txt", problem.hamiltonian.to_text());
      out << "wrote " << (out_dir / "hamiltonian.txt").string() << '\n';
    } else if (config.scenario == "group") {
      json j = grouping_json(problem.hamiltonian, config.sampling.shots);
      j["provenance"] = provenance(config);
      write_file(out_dir / "grouping.json", j.dump(2) + "\n");
      out << j.at("num_sets") << " TPB sets for " << j.at("terms") << " terms\n";
    } else {
      run_scenario(config.scenario, config, problem, base_dir, out_dir, partial, out);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    try {
      json dump{{"provenance", provenance(config)},
                {"error", e.what()},
                {"traces", partial.to_json()}};
      write_file(out_dir / "partial_traces.json", dump.dump(2) + "\n");
      err << "partial traces written to " << (out_dir / "partial_traces.json").string() << '\n';
    } catch (const std::exception& nested) {
      err << "could not write partial traces: " << nested.what() << '\n';
    }
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_map(const MapOptions& options, std::ostream& out, std::ostream& err) {
  fermion::MoleculeOptions mapping;
  std::optional<fermion::IntegralFile> integrals;
  try {
    mapping.scheme = fermion::encoding_from_string(options.scheme);
    mapping.electrons = options.electrons;
    mapping.frozen_orbitals = options.frozen_orbitals;
    mapping.taper = options.taper;
    mapping.odd_z_half = options.odd_z_half;
    integrals = fermion::load_integrals_file(options.integrals);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    const auto mapped = fermion::map_molecule(*integrals, mapping);
    const auto grouping = pauli::group_tpb(mapped.hamiltonian);
    const std::string text = map_header(mapped, mapping.scheme, grouping.num_sets()) +
                             mapped.hamiltonian.to_text();
    if (options.output.empty()) {
      out << text;
    } else {
      write_file(options.output, text);
      out << "wrote " << options.output << ": " << mapped.hamiltonian.num_qubits()
          << " qubits, " << mapped.hamiltonian.size() << " terms, " << grouping.num_sets()
          << " TPB sets\n";
    }
    for (const auto& warning : mapped.warnings) err << "warning: " << warning << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_group(const std::string& hamiltonian, std::size_t shots, const std::string& output,
              std::ostream& out, std::ostream& err) {
  pauli::QubitHamiltonian h(1, {});
  try {
    h = pauli::QubitHamiltonian::load(hamiltonian);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    const std::string text = grouping_json(h, shots).dump(2) + "\n";
    if (output.empty()) {
      out << text;
    } else {
      write_file(output, text);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_report(const std::vector<std::string>& inputs, const std::string& output_dir,
               std::ostream& out, std::ostream& err) {
  if (inputs.empty()) {
    err << "error: no input files\n";
    return kExitUsage;
  }
  experiments::ExperimentReport merged;
  std::vector<json> traces;
  std::vector<std::string> trace_sources;
  std::optional<std::string> scenario;
  bool have_reports = false;
  try {
    for (const auto& path : inputs) {
      std::ifstream file(path);
      if (!file) throw ConfigError("cannot open '" + path + "'");
      json j;
      try {
        j = json::parse(file);
      } catch (const json::parse_error& e) {
        throw ParseError(path, 0, e.what());
      }
      std::string this_scenario;
      if (j.contains("points")) {
        auto report = experiments::ExperimentReport::from_json(j);
        this_scenario = report.scenario;
        if (!have_reports) {
          merged.scenario = report.scenario;
          merged.seed = report.seed;
        }
        have_reports = true;
        for (auto& point : report.points) merged.points.push_back(std::move(point));
      } else if (j.contains("iterations") && j.contains("E_f")) {
        const json& cfg = j.at("config");
        if (j.contains("provenance")) {
          this_scenario = j.at("provenance").at("config").at("scenario").get<std::string>();
        } else {
          this_scenario = cfg.value("scenario", std::string("optimize"));
        }
        traces.push_back(j);
        trace_sources.push_back(path);
      } else {
        throw ParseError(path, 0, "neither a report nor a trace file");
      }
      if (scenario && *scenario != this_scenario) {
        throw ConfigError("mixed scenarios: '" + *scenario + "' and '" + this_scenario + "'");
      }
      scenario = this_scenario;
    }
    if (have_reports && !traces.empty()) {
      throw ConfigError("report and trace files cannot be combined");
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kExitUsage;
  }

  std::string csv;
  json summary;
  if (have_reports) {
    csv = merged.to_csv();
    json points = json::array();
    for (const auto& point : merged.points) {
      json p{{"label", point.label}, {"reference", point.reference}, {"runs", point.runs.size()}};
      if (!point.runs.empty()) {
        p["energy"] = experiments::to_json(point.energy_stats());
        p["error"] = experiments::to_json(point.error_stats());
        p["mean_error"] = point.mean_error();
      }
      points.push_back(std::move(p));
    }
    summary = {{"scenario", merged.scenario}, {"points", points}};
  } else {
    std::ostringstream rows;
    rows << std::setprecision(17);
    rows << "scenario,source,run,E_f,E_f_std,S_f,function_calls,best_energy\n";
    std::vector<double> energies;
    for (std::size_t i = 0; i < traces.size(); ++i) {
      const json& t = traces[i];
      const json& cfg = t.at("config");
      rows << *scenario << ',' << trace_sources[i] << ',' << cfg.value("run", i) << ','
           << t.at("E_f").get<double>() << ',' << t.at("E_f_std").get<double>() << ','
           << t.at("S_f").get<std::size_t>() << ','
           << t.at("function_calls").get<std::size_t>() << ','
           << t.value("best_energy", t.at("E_f").get<double>()) << '\n';
      energies.push_back(t.at("E_f").get<double>());
    }
    csv = rows.str();
    summary = {{"scenario", *scenario},
               {"traces", traces.size()},
               {"energy", experiments::to_json(experiments::percentiles(energies))}};
  }

  try {
    if (output_dir.empty()) {
      out << csv;
    } else {
      write_file(fs::path(output_dir) / "report.csv", csv);
      write_file(fs::path(output_dir) / "summary.json", summary.dump(2) + "\n");
      out << "wrote " << (fs::path(output_dir) / "report.csv").string() << " and summary.json\n";
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace hevqe::cli
