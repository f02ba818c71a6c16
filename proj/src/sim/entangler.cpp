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

#include "hevqe/sim/entangler.hpp"

#include <complex>
#include <numbers>
#include <set>

#include <Eigen/Eigenvalues>

#include "hevqe/common/errors.hpp"
#include "hevqe/pauli/dense.hpp"

namespace hevqe::sim {

double EntanglerSpec::duration() const {
  double total = 0.0;
  for (const auto& layer : layers) total += layer.duration;
  return total;
}

void EntanglerSpec::validate(std::size_t n_qubits) const {
  for (std::size_t l = 0; l < layers.size(); ++l) {
    std::set<std::size_t> used;
    if (layers[l].duration < 0) {
      throw InvalidArgument("entangler layer " + std::to_string(l) +
                            " has negative duration");
    }
    for (const auto& pair : layers[l].pairs) {
      if (pair.control >= n_qubits || pair.target >= n_qubits) {
        throw DimensionError("entangler pair (" + std::to_string(pair.control) +
                             "," + std::to_string(pair.target) +
                             ") outside the register");
      }
      if (pair.control == pair.target) {
        throw InvalidArgument("entangler pair uses the same qubit twice");
      }
      if (!used.insert(pair.control).second || !used.insert(pair.target).second) {
        throw InvalidArgument("entangler layer " + std::to_string(l) +
                              " has overlapping pairs");
      }
      if (pair.terms.empty()) throw InvalidArgument("entangler pair without terms");
      for (const auto& [label, strength] : pair.terms) {
        if (label.size() != 2 ||
            label.find_first_not_of("IXYZ") != std::string::npos) {
          throw InvalidArgument("bad two-qubit Pauli label '" + label + "'");
        }
      }
    }
  }
}

Eigen::Matrix4cd pair_unitary(const PairTerms& terms) {
  Eigen::Matrix4cd generator = Eigen::Matrix4cd::Zero();
  for (const auto& [label, strength] : terms) {
    generator += 0.5 * strength *
                 pauli::to_matrix(pauli::PauliString::from_string(label));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(generator);
  Eigen::Vector4cd phases;
  for (Eigen::Index i = 0; i < 4; ++i) {
    phases(i) = std::polar(1.0, -solver.eigenvalues()(i));
  }
  return solver.eigenvectors() * phases.asDiagonal() *
         solver.eigenvectors().adjoint();
}

CompiledEntangler::CompiledEntangler(const EntanglerSpec& spec,
                                     std::size_t n_qubits) {
  spec.validate(n_qubits);
  for (const auto& layer : spec.layers) {
    std::vector<Gate> gates;
    for (const auto& pair : layer.pairs) {
      gates.push_back({pair.control, pair.target, pair_unitary(pair.terms)});
    }
    layers_.push_back(std::move(gates));
  }
}

void CompiledEntangler::apply_layer(DensityMatrix& rho, std::size_t layer) const {
  for (const auto& gate : layers_.at(layer)) {
    apply_unitary(rho, {gate.control, gate.target}, gate.unitary);
  }
}

void CompiledEntangler::apply_layer(StateVector& psi, std::size_t layer) const {
  for (const auto& gate : layers_.at(layer)) {
    apply_unitary(psi, {gate.control, gate.target}, gate.unitary);
  }
}

void CompiledEntangler::apply(DensityMatrix& rho) const {
  for (std::size_t l = 0; l < layers_.size(); ++l) apply_layer(rho, l);
}

void CompiledEntangler::apply(StateVector& psi) const {
  for (std::size_t l = 0; l < layers_.size(); ++l) apply_layer(psi, l);
}

void apply_entangler(DensityMatrix& rho, const EntanglerSpec& spec) {
  CompiledEntangler(spec, rho.num_qubits()).apply(rho);
}

PairTerms cross_resonance_terms(double duration, const CrossResonanceRates& rates) {
  const double scale = 2.0 * std::numbers::pi * duration;
  return {{"ZX", scale * rates.zx}, {"ZY", scale * rates.zy},
          {"ZZ", scale * rates.zz}, {"IX", scale * rates.ix},
          {"IY", scale * rates.iy}, {"IZ", scale * rates.iz}};
}

}  // namespace hevqe::sim
