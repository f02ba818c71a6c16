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

#include "hevqe/sim/measurement.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "hevqe/common/errors.hpp"

namespace hevqe::sim {

ReadoutModel::ReadoutModel(std::vector<ReadoutQubit> qubits)
    : qubits_(std::move(qubits)) {
  for (const auto& q : qubits_) {
    const double p10 = q.flip_from_zero(), p01 = q.flip_from_one();
    if (!(p10 >= 0.0 && p10 <= 1.0 && p01 >= 0.0 && p01 <= 1.0)) {
      throw InvalidArgument("readout parameters give flip probabilities outside [0, 1]");
    }
    if (!(q.contrast() > 0.0 && q.contrast() <= 1.0)) {
      throw InvalidArgument("readout contrast 2*eta1 must lie in (0, 1]");
    }
  }
}

ReadoutModel ReadoutModel::symmetric(double error) {
  if (!(error >= 0.0 && error < 0.5)) {
    throw InvalidArgument("assignment error must lie in [0, 1/2)");
  }
  return ReadoutModel({ReadoutQubit{0.5, 0.5 - error}});
}

const ReadoutQubit& ReadoutModel::qubit(std::size_t q) const {
  static const ReadoutQubit kIdeal{};
  if (qubits_.empty()) return kIdeal;
  if (qubits_.size() == 1) return qubits_.front();
  if (q >= qubits_.size()) {
    throw DimensionError("readout model has no entry for qubit " + std::to_string(q));
  }
  return qubits_[q];
}

bool ReadoutModel::is_ideal() const {
  return std::all_of(qubits_.begin(), qubits_.end(),
                     [](const ReadoutQubit& q) { return q.is_ideal(); });
}

std::vector<std::uint64_t> ShotRecord::counts() const {
  std::vector<std::uint64_t> histogram(std::size_t{1} << n_qubits, 0);
  for (auto o : outcomes) ++histogram[o];
  return histogram;
}

Eigen::Matrix2cd post_rotation(pauli::Pauli basis) {
  switch (basis) {
    case pauli::Pauli::X:
      return ry(-std::numbers::pi / 2);
    case pauli::Pauli::Y:
      return rx(std::numbers::pi / 2);
    default:
      return Eigen::Matrix2cd::Identity();
  }
}

namespace {

std::uint64_t index_to_mask(std::uint64_t index, std::size_t n) {
  std::uint64_t mask = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (index >> (n - 1 - q) & 1u) mask |= std::uint64_t{1} << q;
  }
  return mask;
}

std::vector<double> apply_readout(std::vector<double> p, std::size_t n,
                                  const ReadoutModel& readout) {
  if (readout.is_ideal()) return p;
  for (std::size_t q = 0; q < n; ++q) {
    const ReadoutQubit& r = readout.qubit(q);
    const double p10 = r.flip_from_zero(), p01 = r.flip_from_one();
    const std::uint64_t bit = std::uint64_t{1} << q;
    for (std::uint64_t m = 0; m < p.size(); ++m) {
      if (m & bit) continue;
      const double zero = p[m], one = p[m | bit];
      p[m] = zero * (1.0 - p10) + one * p01;
      p[m | bit] = zero * p10 + one * (1.0 - p01);
    }
  }
  return p;
}

void check_basis(std::size_t n, const pauli::PauliString& basis) {
  if (basis.num_qubits() != n) {
    throw DimensionError("measurement basis has " +
                         std::to_string(basis.num_qubits()) + " letters for " +
                         std::to_string(n) + " qubits");
  }
}

}  // namespace

std::vector<double> measurement_probabilities(const DensityMatrix& rho,
                                              const pauli::PauliString& basis,
                                              const ReadoutModel& readout) {
  const std::size_t n = rho.num_qubits();
  check_basis(n, basis);
  DensityMatrix rotated = rho;
  for (std::size_t q = 0; q < n; ++q) {
    const pauli::Pauli letter = basis.at(q);
    if (letter == pauli::Pauli::X || letter == pauli::Pauli::Y) {
      apply_unitary(rotated, {q}, post_rotation(letter));
    }
  }
  std::vector<double> p(rho.dimension());
  for (std::uint64_t i = 0; i < p.size(); ++i) {
    p[index_to_mask(i, n)] =
        std::max(0.0, rotated.data()(static_cast<Eigen::Index>(i),
                                     static_cast<Eigen::Index>(i)).real());
  }
  return apply_readout(std::move(p), n, readout);
}

std::vector<double> measurement_probabilities(const StateVector& psi,
                                              const pauli::PauliString& basis,
                                              const ReadoutModel& readout) {
  const std::size_t n = psi.num_qubits();
  check_basis(n, basis);
  StateVector rotated = psi;
  for (std::size_t q = 0; q < n; ++q) {
    const pauli::Pauli letter = basis.at(q);
    if (letter == pauli::Pauli::X || letter == pauli::Pauli::Y) {
      apply_unitary(rotated, {q}, post_rotation(letter));
    }
  }
  std::vector<double> p(std::size_t{1} << n);
  for (std::uint64_t i = 0; i < p.size(); ++i) {
    p[index_to_mask(i, n)] = std::norm(rotated.amplitudes()(static_cast<Eigen::Index>(i)));
  }
  return apply_readout(std::move(p), n, readout);
}

ShotRecord sample_outcomes(const std::vector<double>& probabilities,
                           std::size_t n_qubits, std::size_t shots, Rng& rng) {
  std::vector<double> cdf(probabilities.size());
  double total = 0.0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    total += probabilities[i];
    cdf[i] = total;
  }
  if (!(total > 0.0)) throw Error("measurement distribution has zero weight");
  ShotRecord record{n_qubits, {}};
  record.outcomes.reserve(shots);
  for (std::size_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * total;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    // Skip zero-probability bins that share the cumulative value.
    while (probabilities[static_cast<std::size_t>(it - cdf.begin())] == 0.0 &&
           it != cdf.begin()) {
      --it;
    }
    record.outcomes.push_back(static_cast<std::uint64_t>(it - cdf.begin()));
  }
  return record;
}

ShotRecord sample_shots(const DensityMatrix& rho, const pauli::PauliString& basis,
                        std::size_t shots, const ReadoutModel& readout, Rng& rng) {
  if (shots == 0) throw InvalidArgument("shot count must be positive");
  return sample_outcomes(measurement_probabilities(rho, basis, readout),
                         rho.num_qubits(), shots, rng);
}

double corrected_shot_value(const pauli::PauliString& term, std::uint64_t outcome,
                            const ReadoutModel& readout) {
  double value = 1.0;
  std::uint64_t support = term.support();
  while (support) {
    const int q = std::countr_zero(support);
    support &= support - 1;
    const ReadoutQubit& r = readout.qubit(static_cast<std::size_t>(q));
    const double reading = (outcome >> q & 1u) ? -1.0 : 1.0;
    value *= (reading - r.offset()) / r.contrast();
  }
  return value;
}

std::map<pauli::PauliString, double> correct_assignment(
    const std::map<pauli::PauliString, double>& raw, const ReadoutModel& readout) {
  std::map<pauli::PauliString, double> corrected;
  for (const auto& [term, value] : raw) {
    const std::size_t n = term.num_qubits();
    std::vector<std::size_t> support;
    double divisor = 1.0;
    for (std::size_t q = 0; q < n; ++q) {
      if (term.at(q) == pauli::Pauli::I) continue;
      support.push_back(q);
      const double contrast = readout.qubit(q).contrast();
      if (!(contrast > 0.0)) throw InvalidArgument("readout contrast must be positive");
      divisor *= contrast;
    }
    // Expand prod_q (z_q - offset_q) over subsets of the support.
    double numerator = 0.0;
    const std::uint64_t subsets = std::uint64_t{1} << support.size();
    for (std::uint64_t s = 0; s < subsets; ++s) {
      double weight = 1.0;
      pauli::PauliString sub(n);
      for (std::size_t t = 0; t < support.size(); ++t) {
        if (s >> t & 1u) {
          sub.set(support[t], term.at(support[t]));
        } else {
          weight *= -readout.qubit(support[t]).offset();
        }
      }
      if (weight == 0.0) continue;
      double sub_value = 1.0;
      if (!sub.is_identity()) {
        auto it = raw.find(sub);
        if (it == raw.end()) {
          throw InvalidArgument("asymmetric readout correction of " + term.str() +
                                " needs the raw value of " + sub.str());
        }
        sub_value = it->second;
      }
      numerator += weight * sub_value;
    }
    corrected[term] = numerator / divisor;
  }
  return corrected;
}

}  // namespace hevqe::sim
