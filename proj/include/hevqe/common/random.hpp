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

#include <cstdint>
#include <random>

namespace hevqe {

/// Mixes two 64-bit words into a well-distributed seed (SplitMix64 finalizer).
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

/// Deterministic random stream.
///
/// Wraps std::mt19937_64 and derives child streams from the construction seed
/// only, so split(i) does not depend on how much of the parent was consumed.
/// Distributions are implemented here rather than taken from <random> so that
/// sequences are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  /// Independent child stream identified by `stream`.
  Rng split(std::uint64_t stream) const;

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Standard normal deviate (Box-Muller, both values used).
  double normal();

  /// Symmetric Bernoulli +1 / -1.
  int sign();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace hevqe
