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

#include "hevqe/sim/noise.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <string>

#include "hevqe/common/errors.hpp"
#include "hevqe/pauli/dense.hpp"

namespace hevqe::sim {

double Coherence::t_phi() const {
  const double rate = 1.0 / t2_star - 0.5 / t1;
  if (rate <= 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / rate;
}

NoiseModel NoiseModel::none() { return {}; }

NoiseModel NoiseModel::thermal(double t1, double t2_star,
                               std::optional<double> entangler_duration) {
  NoiseModel model;
  model.kind = Kind::thermal;
  model.coherence = {Coherence{t1, t2_star}};
  model.entangler_duration = entangler_duration;
  return model;
}

NoiseModel NoiseModel::depolarizing(double strength) {
  NoiseModel model;
  model.kind = Kind::depolarizing;
  model.depolarizing_strength = strength;
  return model;
}

bool NoiseModel::is_noiseless() const {
  switch (kind) {
    case Kind::none:
      return true;
    case Kind::depolarizing:
      return depolarizing_strength == 0.0;
    case Kind::thermal:
      for (const auto& c : coherence) {
        if (std::isfinite(c.t1) || std::isfinite(c.t2_star)) return false;
      }
      return true;
  }
  return false;
}

const Coherence& NoiseModel::qubit(std::size_t q) const {
  return coherence.size() == 1 ? coherence.front() : coherence.at(q);
}

void NoiseModel::validate(std::size_t n_qubits) const {
  if (kind == Kind::depolarizing &&
      !(depolarizing_strength >= 0.0 && depolarizing_strength <= 1.0)) {
    throw InvalidArgument("depolarizing strength must lie in [0, 1]");
  }
  if (kind != Kind::thermal) return;
  if (coherence.empty() ||
      (coherence.size() != 1 && coherence.size() != n_qubits)) {
    throw InvalidArgument("thermal noise needs one coherence entry or one per qubit");
  }
  for (const auto& c : coherence) {
    if (!(c.t1 > 0.0) || !(c.t2_star > 0.0)) {
      throw InvalidArgument("T1 and T2* must be positive");
    }
    if (c.t2_star > 2.0 * c.t1) {
      throw InvalidArgument("T2* must not exceed 2 T1");
    }
  }
  if (!(single_qubit_duration >= 0.0) ||
      (entangler_duration && !(*entangler_duration >= 0.0))) {
    throw InvalidArgument("gate durations must be non-negative");
  }
}

std::vector<Eigen::MatrixXcd> amplitude_damping_kraus(double tau, double t1) {
  const double decay = std::exp(-tau / t1);
  Eigen::MatrixXcd e0 = Eigen::MatrixXcd::Zero(2, 2);
  Eigen::MatrixXcd e1 = Eigen::MatrixXcd::Zero(2, 2);
  e0(0, 0) = 1.0;
  e0(1, 1) = std::sqrt(decay);
  e1(0, 1) = std::sqrt(1.0 - decay);
  return {e0, e1};
}

std::vector<Eigen::MatrixXcd> dephasing_kraus(double tau, double t_phi) {
  const double decay = std::exp(-tau / t_phi);
  Eigen::MatrixXcd e0 = Eigen::MatrixXcd::Zero(2, 2);
  Eigen::MatrixXcd e1 = Eigen::MatrixXcd::Zero(2, 2);
  e0(0, 0) = 1.0;
  e0(1, 1) = decay;
  e1(1, 1) = std::sqrt(1.0 - decay * decay);
  return {e0, e1};
}

std::vector<Eigen::MatrixXcd> depolarizing_kraus(std::size_t n_sites, double xi) {
  if (n_sites != 1 && n_sites != 2) {
    throw InvalidArgument("depolarizing channel acts on one or two sites");
  }
  if (!(xi >= 0.0 && xi <= 1.0)) {
    throw InvalidArgument("depolarizing strength must lie in [0, 1]");
  }
  const std::size_t count = n_sites == 1 ? 4 : 16;
  const double other = std::sqrt(xi / static_cast<double>(count - 1));
  std::vector<Eigen::MatrixXcd> kraus;
  for (std::uint64_t code = 0; code < count; ++code) {
    pauli::PauliString p(n_sites);
    for (std::size_t s = 0; s < n_sites; ++s) {
      p.set(s, static_cast<pauli::Pauli>(code >> (2 * s) & 3u));
    }
    const double weight = code == 0 ? std::sqrt(1.0 - xi) : other;
    kraus.push_back(weight * pauli::to_matrix(p));
  }
  return kraus;
}

void apply_thermal_noise(DensityMatrix& rho, double tau, const NoiseModel& model) {
  if (model.kind != NoiseModel::Kind::thermal) {
    throw InvalidArgument("thermal channel requested for a non-thermal model");
  }
  if (tau == 0.0) return;
  for (std::size_t q = 0; q < rho.num_qubits(); ++q) {
    const Coherence& c = model.qubit(q);
    if (std::isfinite(c.t1)) apply_kraus(rho, {q}, amplitude_damping_kraus(tau, c.t1));
    const double t_phi = c.t_phi();
    if (std::isfinite(t_phi)) apply_kraus(rho, {q}, dephasing_kraus(tau, t_phi));
  }
}

void apply_depolarizing(DensityMatrix& rho, const std::vector<std::size_t>& sites,
                        double xi) {
  if (sites.size() != 1 && sites.size() != 2) {
    throw InvalidArgument("depolarizing channel acts on one or two sites");
  }
  if (!(xi >= 0.0 && xi <= 1.0)) {
    throw InvalidArgument("depolarizing strength must lie in [0, 1]");
  }
  const std::size_t n = rho.num_qubits();
  std::uint64_t mask = 0;
  for (std::size_t q : sites) {
    if (q >= n) throw DimensionError("depolarizing site out of range");
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
    if (mask & bit) throw DimensionError("repeated depolarizing site");
    mask |= bit;
  }
  if (xi == 0.0) return;

  // Sum over all Paulis on the sites equals 2^k Tr_sites(rho) (x) I.
  const double local_dim = static_cast<double>(std::size_t{1} << sites.size());
  const double others = local_dim * local_dim - 1.0;
  const double keep = 1.0 - xi - xi / others;
  const double mixed = xi * local_dim / others;

  std::vector<std::uint64_t> patterns;
  for (std::uint64_t sub = mask;; sub = (sub - 1) & mask) {
    patterns.push_back(sub);
    if (sub == 0) break;
  }
  auto& data = rho.data();
  const auto dim = static_cast<std::uint64_t>(data.rows());
  Eigen::MatrixXcd out = keep * data;
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & mask) continue;
    for (std::uint64_t j = 0; j < dim; ++j) {
      if (j & mask) continue;
      std::complex<double> reduced = 0.0;
      for (std::uint64_t a : patterns) {
        reduced += data(static_cast<Eigen::Index>(i | a), static_cast<Eigen::Index>(j | a));
      }
      reduced *= mixed;
      for (std::uint64_t a : patterns) {
        out(static_cast<Eigen::Index>(i | a), static_cast<Eigen::Index>(j | a)) += reduced;
      }
    }
  }
  data = std::move(out);
}

}  // namespace hevqe::sim
