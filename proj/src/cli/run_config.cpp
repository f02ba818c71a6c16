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

#include "hevqe/cli/run_config.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "hevqe/fermion/fermion_hamiltonian.hpp"

namespace hevqe::cli {

using nlohmann::json;

std::string to_string(Tier tier) { return tier == Tier::smoke ? "smoke" : "paper"; }

Tier tier_from_string(std::string_view name) {
  if (name == "smoke") return Tier::smoke;
  if (name == "paper") return Tier::paper;
  throw ConfigError("unknown tier '" + std::string(name) + "' (expected smoke or paper)");
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{
      "optimize",     "sweep",         "heisenberg",       "group",       "map",
      "phase-study", "noise-scaling", "sampling-scaling", "depth-search"};
  return names;
}

namespace {

/// Reads one JSON object, tracking which keys were consumed so leftovers can
/// be reported as unknown.
class Section {
 public:
  Section(const json& node, std::string path) : node_(node), path_(std::move(path)) {
    if (!node_.is_object()) throw ConfigError(where() + " must be an object");
  }

  bool has(const std::string& key) const { return node_.contains(key); }

  const json& raw(const std::string& key) {
    seen_.insert(key);
    return node_.at(key);
  }

  template <typename T>
  T get(const std::string& key, T fallback) {
    if (!has(key)) return fallback;
    return convert<T>(raw(key), key);
  }

  template <typename T>
  std::optional<T> optional(const std::string& key, std::optional<T> fallback) {
    if (!has(key)) return fallback;
    const json& value = raw(key);
    if (value.is_null()) return std::nullopt;
    return convert<T>(value, key);
  }

  Section child(const std::string& key) { return Section(raw(key), path_ + "." + key); }

  std::string where(const std::string& key = "") const {
    return key.empty() ? path_ : path_ + "." + key;
  }

  void finish() const {
    for (const auto& [key, value] : node_.items()) {
      if (!seen_.count(key)) throw ConfigError("unknown key '" + where(key) + "'");
    }
  }

  template <typename T>
  T convert(const json& value, const std::string& key) const {
    try {
      if constexpr (std::is_same_v<T, std::size_t> || std::is_same_v<T, std::uint64_t>) {
        if (!value.is_number_unsigned()) throw ConfigError("");
      } else if constexpr (std::is_same_v<T, int>) {
        if (!value.is_number_integer()) throw ConfigError("");
      } else if constexpr (std::is_same_v<T, double>) {
        if (!value.is_number()) throw ConfigError("");
      } else if constexpr (std::is_same_v<T, bool>) {
        if (!value.is_boolean()) throw ConfigError("");
      } else if constexpr (std::is_same_v<T, std::string>) {
        if (!value.is_string()) throw ConfigError("");
      }
      return value.get<T>();
    } catch (const std::exception&) {
      throw ConfigError("key '" + where(key) + "' has the wrong type");
    }
  }

 private:
  const json& node_;
  std::string path_;
  std::set<std::string> seen_;
};

template <typename T>
std::vector<T> read_list(Section& section, const std::string& key, std::vector<T> fallback) {
  if (!section.has(key)) return fallback;
  const json& value = section.raw(key);
  if (!value.is_array()) throw ConfigError("key '" + section.where(key) + "' must be a list");
  std::vector<T> out;
  for (const json& item : value) out.push_back(section.convert<T>(item, key));
  return out;
}

std::pair<std::size_t, std::size_t> read_pair(const json& item, const std::string& where) {
  if (!item.is_array() || item.size() != 2 || !item[0].is_number_unsigned() ||
      !item[1].is_number_unsigned()) {
    throw ConfigError("'" + where + "' entries must be [a, b] pairs of qubit indices");
  }
  return {item[0].get<std::size_t>(), item[1].get<std::size_t>()};
}

void read_problem(Section s, ProblemSource& problem) {
  const int sources = static_cast<int>(s.has("integrals")) + s.has("hamiltonian") +
                      s.has("heisenberg");
  if (sources != 1) {
    throw ConfigError("problem needs exactly one of 'integrals', 'hamiltonian', 'heisenberg'");
  }
  if (s.has("integrals")) {
    problem.kind = ProblemSource::Kind::integrals;
    problem.path = s.get<std::string>("integrals", "");
    auto& m = problem.mapping;
    try {
      m.scheme = fermion::encoding_from_string(
          s.get<std::string>("scheme", fermion::to_string(m.scheme)));
    } catch (const InvalidArgument& e) {
      throw ConfigError(std::string("problem.scheme: ") + e.what());
    }
    m.electrons = s.optional<int>("electrons", std::nullopt);
    m.frozen_orbitals = s.get<std::size_t>("frozen_orbitals", m.frozen_orbitals);
    m.taper = s.get<bool>("taper", m.taper);
    m.odd_z_half = s.get<int>("odd_z_half", m.odd_z_half);
    if (m.odd_z_half != 1 && m.odd_z_half != -1) {
      throw ConfigError("problem.odd_z_half must be +1 or -1");
    }
  } else if (s.has("hamiltonian")) {
    problem.kind = ProblemSource::Kind::hamiltonian;
    problem.path = s.get<std::string>("hamiltonian", "");
  } else {
    problem.kind = ProblemSource::Kind::heisenberg;
    Section h = s.child("heisenberg");
    auto& model = problem.heisenberg;
    model.n_qubits = h.get<std::size_t>("n_qubits", model.n_qubits);
    if (h.has("edges")) {
      model.edges.clear();
      const json& edges = h.raw("edges");
      if (!edges.is_array()) throw ConfigError("problem.heisenberg.edges must be a list");
      for (const json& e : edges) model.edges.push_back(read_pair(e, "problem.heisenberg.edges"));
    }
    model.coupling = h.get<double>("coupling", model.coupling);
    model.field = h.get<double>("field", model.field);
    h.finish();
    try {
      model.validate();
    } catch (const Error& e) {
      throw ConfigError(std::string("problem.heisenberg: ") + e.what());
    }
  }
  s.finish();
}

void read_ansatz(Section s, RunConfig& config) {
  auto& a = config.ansatz;
  a.depth = s.get<std::size_t>("depth", a.depth);
  if (s.has("topology")) {
    const json& t = s.raw("topology");
    if (t.is_string()) {
      config.topology_name = t.get<std::string>();
      config.topology.reset();
    } else if (t.is_array()) {
      std::vector<std::pair<ansatz::Edge, std::size_t>> edges;
      for (std::size_t layer = 0; layer < t.size(); ++layer) {
        if (!t[layer].is_array()) {
          throw ConfigError("ansatz.topology layers must be lists of [control, target]");
        }
        for (const json& e : t[layer]) {
          const auto [c, tg] = read_pair(e, "ansatz.topology");
          edges.push_back({ansatz::Edge{c, tg}, layer});
        }
      }
      config.topology = ansatz::Topology::custom(edges);
      config.topology_name = "custom";
    } else {
      throw ConfigError("ansatz.topology must be a name or a list of layers");
    }
  }
  if (s.has("entangler")) {
    Section e = s.child("entangler");
    try {
      a.entangler.kind = ansatz::entangler_kind_from_string(
          e.get<std::string>("kind", ansatz::to_string(a.entangler.kind)));
    } catch (const InvalidArgument& err) {
      throw ConfigError(std::string("ansatz.entangler.kind: ") + err.what());
    }
    a.entangler.phase = e.optional<double>("phase", a.entangler.phase);
    a.entangler.layer_duration = e.get<double>("layer_duration", a.entangler.layer_duration);
    e.finish();
    if (!a.entangler.phase && a.entangler.kind != ansatz::EntanglerTemplate::Kind::cr_measured) {
      throw ConfigError("ansatz.entangler.phase is required for ideal entanglers");
    }
  }
  if (s.has("variant")) {
    try {
      a.variant = ansatz::variant_from_string(s.get<std::string>("variant", ""));
    } catch (const InvalidArgument& err) {
      throw ConfigError(std::string("ansatz.variant: ") + err.what());
    }
  }
  s.finish();
}

void read_noise(Section s, sim::NoiseModel& noise) {
  const std::string kind = s.get<std::string>("kind", "none");
  if (kind == "none") {
    noise = sim::NoiseModel::none();
  } else if (kind == "thermal") {
    noise = sim::NoiseModel::thermal(30e-6, 20e-6);
  } else if (kind == "depolarizing") {
    noise = sim::NoiseModel::depolarizing(0.0);
  } else {
    throw ConfigError("noise.kind must be none, thermal or depolarizing");
  }
  if (s.has("coherence")) {
    noise.coherence.clear();
    const json& table = s.raw("coherence");
    if (!table.is_array()) throw ConfigError("noise.coherence must be a list");
    for (const json& entry : table) {
      Section c(entry, "noise.coherence[]");
      noise.coherence.push_back({c.get<double>("t1", 30e-6), c.get<double>("t2_star", 20e-6)});
      c.finish();
    }
  } else if (s.has("t1") || s.has("t2_star")) {
    noise.coherence = {sim::Coherence{s.get<double>("t1", 30e-6),
                                      s.get<double>("t2_star", 20e-6)}};
  }
  noise.single_qubit_duration =
      s.get<double>("single_qubit_duration", noise.single_qubit_duration);
  noise.entangler_duration = s.optional<double>("entangler_duration", noise.entangler_duration);
  noise.depolarizing_strength = s.get<double>("strength", noise.depolarizing_strength);
  s.finish();
}

void read_sampling(Section s, RunConfig& config) {
  auto& sampling = config.sampling;
  try {
    sampling.mode = experiments::objective_mode_from_string(
        s.get<std::string>("mode", experiments::to_string(sampling.mode)));
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("sampling.mode: ") + e.what());
  }
  sampling.shots = s.get<std::size_t>("shots", sampling.shots);
  sampling.final_shots = s.get<std::size_t>("final_shots", sampling.final_shots);
  sampling.injected_noise = s.get<double>("injected_noise", sampling.injected_noise);
  if (s.has("readout_error") && s.has("readout")) {
    throw ConfigError("sampling.readout_error and sampling.readout are exclusive");
  }
  if (s.has("readout_error")) {
    const double eps = s.get<double>("readout_error", 0.0);
    config.readout = {sim::ReadoutQubit{0.5, 0.5 - eps}};
  } else if (s.has("readout")) {
    config.readout.clear();
    const json& table = s.raw("readout");
    if (!table.is_array()) throw ConfigError("sampling.readout must be a list");
    for (const json& entry : table) {
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        throw ConfigError("sampling.readout entries must be [eta0, eta1]");
      }
      config.readout.push_back({entry[0].get<double>(), entry[1].get<double>()});
    }
  }
  s.finish();
  try {
    if (!config.readout.empty()) sim::ReadoutModel model(config.readout);
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("sampling.readout: ") + e.what());
  }
}

void read_spsa(Section s, spsa::SpsaConfig& spsa) {
  spsa.c = s.get<double>("c", spsa.c);
  spsa.a = s.optional<double>("a", spsa.a);
  spsa.alpha = s.get<double>("alpha", spsa.alpha);
  spsa.gamma = s.get<double>("gamma", spsa.gamma);
  spsa.max_updates = s.get<std::size_t>("max_updates", spsa.max_updates);
  spsa.averaging_window = s.get<std::size_t>("averaging_window", spsa.averaging_window);
  spsa.calibration_samples =
      s.get<std::size_t>("calibration_samples", spsa.calibration_samples);
  spsa.target_first_step = s.get<double>("target_first_step", spsa.target_first_step);
  s.finish();
  try {
    spsa.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("spsa: ") + e.what());
  }
}

void read_escalation(Section s, experiments::Escalation& esc) {
  esc.enabled = s.get<bool>("enabled", esc.enabled);
  esc.max_rounds = s.get<std::size_t>("max_rounds", esc.max_rounds);
  esc.threshold = s.get<double>("threshold", esc.threshold);
  esc.update_factor = s.get<double>("update_factor", esc.update_factor);
  esc.shot_factor = s.get<double>("shot_factor", esc.shot_factor);
  s.finish();
}

void read_study(Section s, StudySettings& study) {
  study.depths = read_list<std::size_t>(s, "depths", study.depths);
  study.phases = read_list<double>(s, "phases", study.phases);
  study.strengths = read_list<double>(s, "strengths", study.strengths);
  study.shots = read_list<std::size_t>(s, "shots", study.shots);
  study.couplings = read_list<double>(s, "couplings", study.couplings);
  if (s.has("geometries")) {
    const json& list = s.raw("geometries");
    if (!list.is_array()) throw ConfigError("study.geometries must be a list");
    study.geometries.clear();
    for (const json& entry : list) {
      Section g(entry, "study.geometries[]");
      if (!g.has("bond_length") || !g.has("path")) {
        throw ConfigError("study.geometries entries need bond_length and path");
      }
      study.geometries.push_back(
          {g.get<double>("bond_length", 0.0), g.get<std::string>("path", "")});
      g.finish();
    }
  }
  study.min_depth = s.get<std::size_t>("min_depth", study.min_depth);
  study.max_depth = s.get<std::size_t>("max_depth", study.max_depth);
  study.function_budget = s.get<std::size_t>("function_budget", study.function_budget);
  study.threshold = s.get<double>("threshold", study.threshold);
  study.surrogate.reference_states =
      s.get<std::size_t>("reference_states", study.surrogate.reference_states);
  study.surrogate.reference_shots =
      s.get<std::size_t>("reference_shots", study.surrogate.reference_shots);
  s.finish();
}

}  // namespace

RunConfig parse_run_config(const json& j) {
  RunConfig config;
  Section top(j, "config");
  config.scenario = top.get<std::string>("scenario", config.scenario);
  const auto& names = scenario_names();
  if (std::find(names.begin(), names.end(), config.scenario) == names.end()) {
    throw ConfigError("unknown scenario '" + config.scenario + "'");
  }
  config.seed = top.get<std::uint64_t>("seed", config.seed);
  config.tier = tier_from_string(top.get<std::string>("tier", to_string(config.tier)));
  config.output_dir = top.get<std::string>("output_dir", config.output_dir);
  config.threads = top.get<std::size_t>("threads", config.threads);
  config.runs = top.get<std::size_t>("runs", config.runs);
  if (config.runs == 0) throw ConfigError("config.runs must be positive");
  config.function_budget = top.optional<std::size_t>("function_budget", config.function_budget);
  config.keep_traces = top.get<bool>("keep_traces", config.keep_traces);
  if (top.has("problem")) read_problem(top.child("problem"), config.problem);
  if (top.has("ansatz")) read_ansatz(top.child("ansatz"), config);
  if (top.has("noise")) read_noise(top.child("noise"), config.noise);
  if (top.has("sampling")) read_sampling(top.child("sampling"), config);
  if (top.has("spsa")) read_spsa(top.child("spsa"), config.spsa);
  if (top.has("escalation")) read_escalation(top.child("escalation"), config.escalation);
  if (top.has("study")) read_study(top.child("study"), config.study);
  top.finish();
  return config;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json j;
  try {
    j = json::parse(in, nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_run_config(j);
}

json to_json(const RunConfig& c) {
  json problem;
  switch (c.problem.kind) {
    case ProblemSource::Kind::integrals: {
      const auto& m = c.problem.mapping;
      problem = {{"integrals", c.problem.path},
                 {"scheme", fermion::to_string(m.scheme)},
                 {"electrons", m.electrons ? json(*m.electrons) : json(nullptr)},
                 {"frozen_orbitals", m.frozen_orbitals},
                 {"taper", m.taper},
                 {"odd_z_half", m.odd_z_half}};
      break;
    }
    case ProblemSource::Kind::hamiltonian:
      problem = {{"hamiltonian", c.problem.path}};
      break;
    case ProblemSource::Kind::heisenberg: {
      const auto& h = c.problem.heisenberg;
      json edges = json::array();
      for (const auto& [a, b] : h.edges) edges.push_back({a, b});
      problem = {{"heisenberg",
                  {{"n_qubits", h.n_qubits},
                   {"edges", edges},
                   {"coupling", h.coupling},
                   {"field", h.field}}}};
      break;
    }
  }

  json topology;
  if (c.topology) {
    topology = json::array();
    for (const auto& layer : c.topology->layers) {
      json l = json::array();
      for (const auto& e : layer) l.push_back({e.first, e.second});
      topology.push_back(l);
    }
  } else {
    topology = c.topology_name;
  }
  const auto& e = c.ansatz.entangler;
  json ansatz{{"depth", c.ansatz.depth},
              {"topology", topology},
              {"entangler",
               {{"kind", ansatz::to_string(e.kind)},
                {"phase", e.phase ? json(*e.phase) : json(nullptr)},
                {"layer_duration", e.layer_duration}}},
              {"variant", ansatz::to_string(c.ansatz.variant)}};

  const char* kinds[] = {"none", "thermal", "depolarizing"};
  json coherence = json::array();
  for (const auto& q : c.noise.coherence) {
    coherence.push_back({{"t1", q.t1}, {"t2_star", q.t2_star}});
  }
  json noise{{"kind", kinds[static_cast<int>(c.noise.kind)]},
             {"coherence", coherence},
             {"single_qubit_duration", c.noise.single_qubit_duration},
             {"entangler_duration", c.noise.entangler_duration
                                        ? json(*c.noise.entangler_duration)
                                        : json(nullptr)},
             {"strength", c.noise.depolarizing_strength}};

  json readout = json::array();
  for (const auto& q : c.readout) readout.push_back({q.eta0, q.eta1});
  json sampling{{"mode", experiments::to_string(c.sampling.mode)},
                {"shots", c.sampling.shots},
                {"final_shots", c.sampling.final_shots},
                {"injected_noise", c.sampling.injected_noise},
                {"readout", readout}};

  json spsa = spsa::to_json(c.spsa);

  json escalation{{"enabled", c.escalation.enabled},
                  {"max_rounds", c.escalation.max_rounds},
                  {"threshold", c.escalation.threshold},
                  {"update_factor", c.escalation.update_factor},
                  {"shot_factor", c.escalation.shot_factor}};

  json geometries = json::array();
  for (const auto& g : c.study.geometries) {
    geometries.push_back({{"bond_length", g.bond_length}, {"path", g.path}});
  }
  json study{{"depths", c.study.depths},
             {"phases", c.study.phases},
             {"strengths", c.study.strengths},
             {"shots", c.study.shots},
             {"couplings", c.study.couplings},
             {"geometries", geometries},
             {"min_depth", c.study.min_depth},
             {"max_depth", c.study.max_depth},
             {"function_budget", c.study.function_budget},
             {"threshold", c.study.threshold},
             {"reference_states", c.study.surrogate.reference_states},
             {"reference_shots", c.study.surrogate.reference_shots}};

  return {{"scenario", c.scenario},
          {"seed", c.seed},
          {"tier", to_string(c.tier)},
          {"output_dir", c.output_dir},
          {"threads", c.threads},
          {"runs", c.runs},
          {"function_budget", c.function_budget ? json(*c.function_budget) : json(nullptr)},
          {"keep_traces", c.keep_traces},
          {"problem", problem},
          {"ansatz", ansatz},
          {"noise", noise},
          {"sampling", sampling},
          {"spsa", spsa},
          {"escalation", escalation},
          {"study", study}};
}

std::string config_hash(const RunConfig& config) {
  json canonical = to_json(config);
  // Execution-only settings do not change results.
  canonical.erase("output_dir");
  canonical.erase("threads");
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : canonical.dump()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(h));
  return buffer;
}

RunConfig apply_tier(RunConfig config) {
  if (config.tier == Tier::paper) return config;
  constexpr std::size_t kRuns = 3;
  constexpr std::size_t kUpdates = 60;
  constexpr std::size_t kBudget = 2000;
  constexpr std::size_t kDepth = 3;
  constexpr std::size_t kShots = 100000;
  config.runs = std::min(config.runs, kRuns);
  config.spsa.max_updates = std::min(config.spsa.max_updates, kUpdates);
  config.spsa.averaging_window =
      std::min(config.spsa.averaging_window, config.spsa.max_updates);
  if (config.function_budget) config.function_budget = std::min(*config.function_budget, kBudget);
  config.sampling.final_shots = std::min(config.sampling.final_shots, kShots);
  config.study.function_budget = std::min(config.study.function_budget, kBudget);
  config.study.max_depth = std::min(config.study.max_depth, kDepth);
  config.study.surrogate.reference_states =
      std::min<std::size_t>(config.study.surrogate.reference_states, 20);
  return config;
}

LoadedProblem load_problem(const ProblemSource& problem, const std::string& base_dir) {
  auto resolve = [&](const std::string& path) {
    const std::filesystem::path p(path);
    return (p.is_absolute() || base_dir.empty()) ? p.string()
                                                 : (std::filesystem::path(base_dir) / p).string();
  };
  switch (problem.kind) {
    case ProblemSource::Kind::integrals: {
      const std::string path = resolve(problem.path);
      const auto mapped =
          fermion::map_molecule(fermion::load_integrals_file(path), problem.mapping);
      json info{{"source", path},
                {"scheme", fermion::to_string(problem.mapping.scheme)},
                {"active_electrons", mapped.active_electrons},
                {"warnings", mapped.warnings}};
      if (mapped.sector) {
        info["sector"] = {{"z_half", mapped.sector->z_half},
                          {"z_full", mapped.sector->z_full}};
      }
      return {mapped.hamiltonian, info};
    }
    case ProblemSource::Kind::hamiltonian: {
      const std::string path = resolve(problem.path);
      return {pauli::QubitHamiltonian::load(path), {{"source", path}}};
    }
    case ProblemSource::Kind::heisenberg:
      return {experiments::heisenberg_hamiltonian(problem.heisenberg),
              {{"source", "heisenberg"},
               {"coupling", problem.heisenberg.coupling},
               {"field", problem.heisenberg.field}}};
  }
  throw InvalidArgument("unknown problem source");
}

experiments::PipelineConfig pipeline_config(const RunConfig& config, std::size_t n_qubits) {
  experiments::PipelineConfig p;
  p.ansatz = config.ansatz;
  p.ansatz.n_qubits = n_qubits;
  p.ansatz.topology = config.topology ? *config.topology
                                      : ansatz::Topology::by_name(config.topology_name, n_qubits);
  p.noise = config.noise;
  p.sampling = config.sampling;
  if (!config.readout.empty()) p.sampling.readout = sim::ReadoutModel(config.readout);
  p.spsa = config.spsa;
  p.n_runs = config.runs;
  p.seed = config.seed;
  p.scenario = config.scenario;
  p.function_budget = config.function_budget;
  p.escalation = config.escalation;
  p.threads = config.threads;
  p.keep_traces = config.keep_traces;
  return p;
}

}  // namespace hevqe::cli
