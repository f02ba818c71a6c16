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
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hevqe/sim/state.hpp"

namespace hevqe::sim {

/// Two-letter Pauli labels (control letter first) mapped to accumulated
/// angles s, each contributing exp(-i s/2 P) to the pair generator.
using PairTerms = std::map<std::string, double>;

struct DirectedPair {
  std::size_t control = 0;
  std::size_t target = 0;
  PairTerms terms;
};

struct EntanglerLayer {
  std::vector<DirectedPair> pairs;
  /// Wall-clock duration of the layer in seconds, used by thermal noise.
  double duration = 150e-9;
};

struct EntanglerSpec {
  std::vector<EntanglerLayer> layers;

  /// Sum of layer durations.
  double duration() const;
  /// Checks indices, disjointness within each layer and term labels.
  void validate(std::size_t n_qubits) const;
};

/// 4x4 unitary exp(-i sum_P s_P/2 P) in the |control, target> basis.
Eigen::Matrix4cd pair_unitary(const PairTerms& terms);

/// Pair unitaries precomputed once per spec.
class CompiledEntangler {
 public:
  CompiledEntangler() = default;
  CompiledEntangler(const EntanglerSpec& spec, std::size_t n_qubits);

  std::size_t num_layers() const { return layers_.size(); }

  void apply(DensityMatrix& rho) const;
  void apply(StateVector& psi) const;
  void apply_layer(DensityMatrix& rho, std::size_t layer) const;
  void apply_layer(StateVector& psi, std::size_t layer) const;

 private:
  struct Gate {
    std::size_t control;
    std::size_t target;
    Eigen::MatrixXcd unitary;
  };
  std::vector<std::vector<Gate>> layers_;
};

void apply_entangler(DensityMatrix& rho, const EntanglerSpec& spec);

/// Cross-resonance rates measured on hardware, in Hz.
struct CrossResonanceRates {
  double zx = 1.04e6;
  double zy = 0.07e6;
  double zz = 0.05e6;
  double ix = 0.68e6;
  double iy = 0.12e6;
  double iz = 0.02e6;
};

/// Terms accumulated over `duration`: s = 2 pi rate duration.
PairTerms cross_resonance_terms(double duration,
                                const CrossResonanceRates& rates = {});

}  // namespace hevqe::sim
