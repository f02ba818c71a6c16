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

#include "hevqe/ansatz/ansatz.hpp"

#include <algorithm>
#include <numbers>

#include <json.hpp>

#include "hevqe/common/errors.hpp"

namespace hevqe::ansatz {

std::size_t Topology::num_edges() const {
  std::size_t count = 0;
  for (const auto& layer : layers) count += layer.size();
  return count;
}

Topology Topology::experimental_2q() {
  return {"experimental_2q", {{{0, 1}}}};
}

Topology Topology::experimental_4q() {
  return {"experimental_4q", {{{1, 0}}, {{0, 2}, {1, 3}}}};
}

Topology Topology::experimental_6q() {
  return {"experimental_6q", {{{1, 0}, {3, 4}}, {{0, 2}, {5, 4}}, {{1, 3}}}};
}

Topology Topology::all_to_all(std::size_t n_qubits) {
  Topology topology{"all_to_all", {}};
  if (n_qubits < 2) return topology;
  const std::size_t slots = n_qubits % 2 == 0 ? n_qubits : n_qubits + 1;
  std::vector<std::size_t> ring(slots);
  for (std::size_t i = 0; i < slots; ++i) ring[i] = i;
  for (std::size_t round = 0; round + 1 < slots; ++round) {
    std::vector<Edge> layer;
    for (std::size_t i = 0; i < slots / 2; ++i) {
      const std::size_t a = ring[i], b = ring[slots - 1 - i];
      if (a < n_qubits && b < n_qubits) layer.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(layer.begin(), layer.end());
    topology.layers.push_back(std::move(layer));
    // Keep slot 0 fixed and rotate the rest by one.
    std::rotate(ring.begin() + 1, ring.end() - 1, ring.end());
  }
  return topology;
}

Topology Topology::custom(const std::vector<std::pair<Edge, std::size_t>>& edges) {
  Topology topology{"custom", {}};
  for (const auto& [edge, layer] : edges) {
    if (topology.layers.size() <= layer) topology.layers.resize(layer + 1);
    topology.layers[layer].push_back(edge);
  }
  return topology;
}

Topology Topology::by_name(std::string_view name, std::size_t n_qubits) {
  if (name == "experimental_2q") return experimental_2q();
  if (name == "experimental_4q") return experimental_4q();
  if (name == "experimental_6q") return experimental_6q();
  if (name == "all_to_all") return all_to_all(n_qubits);
  if (name == "experimental") {
    switch (n_qubits) {
      case 2:
        return experimental_2q();
      case 4:
        return experimental_4q();
      case 6:
        return experimental_6q();
      default:
        throw InvalidArgument("no experimental topology for " + std::to_string(n_qubits) +
                              " qubits");
    }
  }
  throw InvalidArgument("unknown topology '" + std::string(name) + "'");
}

EntanglerTemplate EntanglerTemplate::cr_measured(std::optional<double> phase) {
  return {Kind::cr_measured, phase};
}

EntanglerTemplate EntanglerTemplate::ideal_zx(double phase) {
  return {Kind::ideal_zx, phase};
}

EntanglerTemplate EntanglerTemplate::ideal_zz(double phase) {
  return {Kind::ideal_zz, phase};
}

sim::PairTerms EntanglerTemplate::terms() const {
  switch (kind) {
    case Kind::ideal_zx:
      return {{"ZX", phase.value_or(std::numbers::pi / 2)}};
    case Kind::ideal_zz:
      return {{"ZZ", phase.value_or(std::numbers::pi / 2)}};
    case Kind::cr_measured: {
      sim::PairTerms terms = sim::cross_resonance_terms(layer_duration);
      if (phase) {
        const double scale = *phase / terms.at("ZX");
        for (auto& [label, strength] : terms) strength *= scale;
      }
      return terms;
    }
  }
  return {};
}

std::string to_string(EntanglerTemplate::Kind kind) {
  switch (kind) {
    case EntanglerTemplate::Kind::cr_measured:
      return "cr_measured";
    case EntanglerTemplate::Kind::ideal_zx:
      return "ideal_zx";
    case EntanglerTemplate::Kind::ideal_zz:
      return "ideal_zz";
  }
  return "unknown";
}

EntanglerTemplate::Kind entangler_kind_from_string(std::string_view name) {
  if (name == "cr_measured") return EntanglerTemplate::Kind::cr_measured;
  if (name == "ideal_zx") return EntanglerTemplate::Kind::ideal_zx;
  if (name == "ideal_zz") return EntanglerTemplate::Kind::ideal_zz;
  throw InvalidArgument("unknown entangler '" + std::string(name) + "'");
}

std::string to_string(Variant variant) {
  return variant == Variant::full_euler ? "full_euler" : "reduced_zz";
}

Variant variant_from_string(std::string_view name) {
  if (name == "full_euler") return Variant::full_euler;
  if (name == "reduced_zz") return Variant::reduced_zz;
  throw InvalidArgument("unknown ansatz variant '" + std::string(name) + "'");
}

namespace {

sim::EntanglerSpec entangler_spec(const AnsatzConfig& config) {
  sim::EntanglerSpec spec;
  const sim::PairTerms terms = config.entangler.terms();
  for (const auto& edges : config.topology.layers) {
    sim::EntanglerLayer layer;
    layer.duration = config.entangler.layer_duration;
    for (const auto& [control, target] : edges) {
      layer.pairs.push_back({control, target, terms});
    }
    spec.layers.push_back(std::move(layer));
  }
  return spec;
}

std::size_t values_per_qubit(const AnsatzConfig& config, std::size_t layer) {
  return layer == 0 || config.variant == Variant::reduced_zz ? 2 : 3;
}

std::size_t layer_offset(const AnsatzConfig& config, std::size_t layer) {
  if (layer == 0) return 0;
  return config.n_qubits * (2 + (layer - 1) * values_per_qubit(config, layer));
}

}  // namespace

void AnsatzConfig::validate() const {
  if (n_qubits == 0 || n_qubits > sim::kMaxQubits) {
    throw DimensionError("ansatz qubit count " + std::to_string(n_qubits) +
                         " outside 1.." + std::to_string(sim::kMaxQubits));
  }
  if (depth > 0 && topology.num_edges() == 0) {
    throw InvalidArgument("depth > 0 needs at least one coupling");
  }
  if (entangler.layer_duration < 0) {
    throw InvalidArgument("entangler layer duration must be non-negative");
  }
  entangler_spec(*this).validate(n_qubits);
}

std::size_t parameter_count(const AnsatzConfig& config) {
  const std::size_t per_layer = config.variant == Variant::full_euler ? 3 : 2;
  return config.n_qubits * (2 + per_layer * config.depth);
}

std::vector<ParameterSlot> parameter_layout(const AnsatzConfig& config) {
  std::vector<ParameterSlot> slots;
  slots.reserve(parameter_count(config));
  for (std::size_t layer = 0; layer <= config.depth; ++layer) {
    for (std::size_t q = 0; q < config.n_qubits; ++q) {
      if (values_per_qubit(config, layer) == 2) {
        slots.push_back({layer, q, Axis::x});
        slots.push_back({layer, q, Axis::z_outer});
      } else {
        slots.push_back({layer, q, Axis::z_outer});
        slots.push_back({layer, q, Axis::x});
        slots.push_back({layer, q, Axis::z_inner});
      }
    }
  }
  return slots;
}

std::vector<double> initial_parameters(const AnsatzConfig& config, Rng& rng) {
  std::vector<double> theta;
  for (const auto& slot : parameter_layout(config)) {
    theta.push_back(slot.axis == Axis::x ? std::numbers::pi / 2 : rng.normal());
  }
  return theta;
}

std::string parameters_to_json(const std::vector<double>& theta) {
  return nlohmann::json(theta).dump();
}

std::vector<double> parameters_from_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    if (!doc.is_array()) throw ParseError("<parameters>", 1, "expected a JSON array");
    std::vector<double> theta;
    for (const auto& v : doc) {
      if (!v.is_number()) throw ParseError("<parameters>", 1, "non-numeric angle");
      theta.push_back(v.get<double>());
    }
    return theta;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("<parameters>", 1, e.what());
  }
}

AnsatzCircuit::AnsatzCircuit(AnsatzConfig config, sim::NoiseModel noise)
    : config_(std::move(config)),
      noise_(std::move(noise)),
      n_params_(parameter_count(config_)) {
  config_.validate();
  noise_.validate(config_.n_qubits);
  const sim::EntanglerSpec spec = entangler_spec(config_);
  entangler_ = sim::CompiledEntangler(spec, config_.n_qubits);
  entangler_duration_ = noise_.entangler_duration.value_or(spec.duration());
}

void AnsatzCircuit::check_length(const std::vector<double>& theta) const {
  if (theta.size() != n_params_) {
    throw DimensionError("parameter vector has " + std::to_string(theta.size()) +
                         " entries, ansatz expects " + std::to_string(n_params_));
  }
}

template <typename State>
void AnsatzCircuit::apply_rotation_layer(State& state,
                                         const std::vector<double>& theta,
                                         std::size_t layer) const {
  const std::size_t offset = layer_offset(config_, layer);
  const std::size_t width = values_per_qubit(config_, layer);
  for (std::size_t q = 0; q < config_.n_qubits; ++q) {
    const double* v = theta.data() + offset + width * q;
    if (width == 2) {
      sim::apply_unitary(state, {q}, sim::rz(v[1]) * sim::rx(v[0]));
    } else {
      sim::apply_unitary(state, {q}, sim::euler_matrix(v[0], v[1], v[2]));
    }
  }
}

sim::DensityMatrix AnsatzCircuit::prepare_state(const std::vector<double>& theta) const {
  check_length(theta);
  using Kind = sim::NoiseModel::Kind;
  const std::size_t n = config_.n_qubits;
  sim::DensityMatrix rho(n);
  auto after_rotations = [&]() {
    if (noise_.kind == Kind::thermal) {
      sim::apply_thermal_noise(rho, noise_.single_qubit_duration, noise_);
    } else if (noise_.kind == Kind::depolarizing) {
      for (std::size_t q = 0; q < n; ++q) {
        sim::apply_depolarizing(rho, {q}, noise_.depolarizing_strength);
      }
    }
  };
  apply_rotation_layer(rho, theta, 0);
  after_rotations();
  for (std::size_t layer = 1; layer <= config_.depth; ++layer) {
    for (std::size_t l = 0; l < entangler_.num_layers(); ++l) {
      entangler_.apply_layer(rho, l);
      if (noise_.kind == Kind::depolarizing) {
        for (const auto& [control, target] : config_.topology.layers[l]) {
          sim::apply_depolarizing(rho, {control, target}, noise_.depolarizing_strength);
        }
      }
    }
    if (noise_.kind == Kind::thermal) {
      sim::apply_thermal_noise(rho, entangler_duration_, noise_);
    }
    apply_rotation_layer(rho, theta, layer);
    after_rotations();
  }
  return rho;
}

sim::StateVector AnsatzCircuit::prepare_pure_state(const std::vector<double>& theta) const {
  check_length(theta);
  if (!is_noiseless()) {
    throw InvalidArgument("pure-state preparation requested for a noisy model");
  }
  sim::StateVector psi(config_.n_qubits);
  apply_rotation_layer(psi, theta, 0);
  for (std::size_t layer = 1; layer <= config_.depth; ++layer) {
    entangler_.apply(psi);
    apply_rotation_layer(psi, theta, layer);
  }
  return psi;
}

sim::DensityMatrix prepare_state(const AnsatzConfig& config,
                                 const std::vector<double>& theta,
                                 const sim::NoiseModel& noise) {
  return AnsatzCircuit(config, noise).prepare_state(theta);
}

}  // namespace hevqe::ansatz
