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

#include "hevqe/estimate/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "hevqe/common/errors.hpp"

namespace hevqe::estimate {

using cd = std::complex<double>;

double expectation(const sim::DensityMatrix& rho, const pauli::PauliString& p) {
  if (p.num_qubits() != rho.num_qubits()) {
    throw DimensionError("Pauli string width differs from the register");
  }
  const auto action = pauli::basis_action(p);
  cd total = 0.0;
  for (std::uint64_t r = 0; r < rho.dimension(); ++r) {
    total += rho.data()(static_cast<Eigen::Index>(r),
                        static_cast<Eigen::Index>(r ^ action.flip_mask)) *
             action.amplitude(r);
  }
  return total.real();
}

double expectation(const sim::StateVector& psi, const pauli::PauliString& p) {
  if (p.num_qubits() != psi.num_qubits()) {
    throw DimensionError("Pauli string width differs from the register");
  }
  const auto action = pauli::basis_action(p);
  const auto& a = psi.amplitudes();
  cd total = 0.0;
  for (std::uint64_t r = 0; r < static_cast<std::uint64_t>(a.size()); ++r) {
    total += std::conj(a(static_cast<Eigen::Index>(r ^ action.flip_mask))) *
             action.amplitude(r) * a(static_cast<Eigen::Index>(r));
  }
  return total.real();
}

namespace {

template <typename State>
double energy_of(const State& state, const pauli::QubitHamiltonian& h) {
  if (h.num_qubits() != state.num_qubits()) {
    throw DimensionError("Hamiltonian acts on " + std::to_string(h.num_qubits()) +
                         " qubits, state has " + std::to_string(state.num_qubits()));
  }
  double energy = h.identity_shift();
  for (const auto& term : h.terms()) {
    energy += term.coefficient * expectation(state, term.string);
  }
  return energy;
}

template <typename State>
EnergyEstimate sample_energy(const State& state, const pauli::QubitHamiltonian& h,
                             const pauli::TpbGrouping& grouping, std::size_t shots,
                             const sim::ReadoutModel& readout, Rng& rng) {
  if (shots < 2) throw InvalidArgument("sampled energy needs at least two shots");
  if (h.num_qubits() != state.num_qubits()) {
    throw DimensionError("Hamiltonian and state sizes differ");
  }
  const std::size_t n = state.num_qubits();
  const Rng base(rng.next_u64());
  const double s = static_cast<double>(shots);

  EnergyEstimate estimate;
  estimate.shots_per_set = shots;
  estimate.num_sets = grouping.num_sets();
  estimate.term_means.assign(h.size(), 0.0);
  double energy = h.identity_shift();
  double variance = 0.0;

  std::vector<double> shot_value(std::size_t{1} << n);
  for (std::size_t set = 0; set < grouping.num_sets(); ++set) {
    Rng stream = base.split(set);
    const auto probabilities =
        sim::measurement_probabilities(state, grouping.bases[set], readout);
    const auto counts = sim::sample_outcomes(probabilities, n, shots, stream).counts();

    std::fill(shot_value.begin(), shot_value.end(), 0.0);
    for (std::size_t index : grouping.sets[set]) {
      const auto& term = h.terms().at(index);
      double sum = 0.0;
      for (std::uint64_t o = 0; o < counts.size(); ++o) {
        if (counts[o] == 0) continue;
        const double v = sim::corrected_shot_value(term.string, o, readout);
        sum += static_cast<double>(counts[o]) * v;
        shot_value[o] += term.coefficient * v;
      }
      estimate.term_means[index] = sum / s;
    }
    // Var of the per-shot set energy equals sum_ab h_a h_b cov(a, b).
    double mean = 0.0;
    for (std::uint64_t o = 0; o < counts.size(); ++o) {
      mean += static_cast<double>(counts[o]) * shot_value[o];
    }
    mean /= s;
    double squares = 0.0;
    for (std::uint64_t o = 0; o < counts.size(); ++o) {
      const double d = shot_value[o] - mean;
      squares += static_cast<double>(counts[o]) * d * d;
    }
    energy += mean;
    variance += squares / (s - 1.0);
  }
  estimate.value = energy;
  estimate.grouped_variance = variance;
  estimate.std_error = std::sqrt(variance / s);
  return estimate;
}

}  // namespace

double exact_energy(const sim::DensityMatrix& rho, const pauli::QubitHamiltonian& h) {
  return energy_of(rho, h);
}

double exact_energy(const sim::StateVector& psi, const pauli::QubitHamiltonian& h) {
  return energy_of(psi, h);
}

EnergyEstimate sampled_energy(const sim::DensityMatrix& rho,
                              const pauli::QubitHamiltonian& h,
                              const pauli::TpbGrouping& grouping, std::size_t shots,
                              const sim::ReadoutModel& readout, Rng& rng) {
  return sample_energy(rho, h, grouping, shots, readout, rng);
}

EnergyEstimate sampled_energy(const sim::StateVector& psi,
                              const pauli::QubitHamiltonian& h,
                              const pauli::TpbGrouping& grouping, std::size_t shots,
                              const sim::ReadoutModel& readout, Rng& rng) {
  return sample_energy(psi, h, grouping, shots, readout, rng);
}

ErrorBounds error_bound(const pauli::QubitHamiltonian& h,
                        const pauli::TpbGrouping& grouping, std::size_t shots) {
  if (shots == 0) throw InvalidArgument("shot count must be positive");
  const double t = static_cast<double>(h.size());
  const double a = static_cast<double>(grouping.num_sets());
  const double s_max = static_cast<double>(grouping.largest_set());
  const double h2 = h.max_abs_coefficient() * h.max_abs_coefficient();
  const double s = static_cast<double>(shots);
  ErrorBounds bounds;
  if (t == 0.0) return bounds;
  bounds.ungrouped = std::sqrt(t * h2 / s);
  bounds.grouped = std::sqrt(a * h2 * (t + a * s_max * s_max) / (t * s));
  return bounds;
}

sim::StateVector random_state(std::size_t n_qubits, Rng& rng) {
  Eigen::VectorXcd v(Eigen::Index{1} << n_qubits);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = rng.normal();
    const double im = rng.normal();
    v(i) = cd(re, im);
  }
  v.normalize();
  return sim::StateVector(n_qubits, std::move(v));
}

VarianceComparison variance_comparison_experiment(const pauli::QubitHamiltonian& h,
                                                  std::size_t n_states,
                                                  std::size_t shots, Rng& rng) {
  if (n_states == 0) throw InvalidArgument("need at least one random state");
  const pauli::TpbGrouping grouped = pauli::group_tpb(h);
  pauli::TpbGrouping single;
  for (std::size_t i = 0; i < h.size(); ++i) {
    single.sets.push_back({i});
    pauli::PauliString basis = h.terms()[i].string;
    for (std::size_t q = 0; q < basis.num_qubits(); ++q) {
      if (basis.at(q) == pauli::Pauli::I) basis.set(q, pauli::Pauli::Z);
    }
    single.bases.push_back(basis);
  }
  VarianceComparison result;
  const double budget = static_cast<double>(shots * grouped.num_sets());
  result.shots_per_term = std::max<std::size_t>(
      2, static_cast<std::size_t>(std::llround(budget / static_cast<double>(h.size()))));
  const sim::ReadoutModel ideal;
  for (std::size_t k = 0; k < n_states; ++k) {
    Rng stream = rng.split(k);
    const sim::StateVector psi = random_state(h.num_qubits(), stream);
    const auto g = sampled_energy(psi, h, grouped, shots, ideal, stream);
    const auto u = sampled_energy(psi, h, single, result.shots_per_term, ideal, stream);
    result.grouped.push_back(g.std_error * g.std_error);
    result.ungrouped.push_back(u.std_error * u.std_error);
  }
  return result;
}

}  // namespace hevqe::estimate
