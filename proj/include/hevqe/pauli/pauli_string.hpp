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

#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace hevqe::pauli {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Pauli p);
Pauli pauli_from_char(char c);

/// Power of i: value k encodes i^k, k in {0, 1, 2, 3}.
struct Phase {
  std::uint8_t power = 0;

  std::complex<double> value() const;
  Phase operator*(Phase other) const {
    return Phase{static_cast<std::uint8_t>((power + other.power) & 3u)};
  }
  bool operator==(const Phase&) const = default;
};

/// Tensor product of single-qubit Pauli letters on up to 64 qubits.
///
/// Letters are bit-packed: bit q of x_bits()/z_bits() belongs to qubit q, with
/// X = (1, 0), Z = (0, 1), Y = (1, 1). Qubit 0 is the leftmost letter of the
/// text form. Ordering compares letters left to right with I < X < Y < Z.
class PauliString {
 public:
  static constexpr std::size_t kMaxQubits = 64;

  explicit PauliString(std::size_t n_qubits);
  PauliString(std::size_t n_qubits, std::uint64_t x_bits, std::uint64_t z_bits);

  /// Parses letters from {I, X, Y, Z}; throws InvalidArgument otherwise.
  static PauliString from_string(std::string_view letters);

  std::size_t num_qubits() const { return n_qubits_; }
  std::uint64_t x_bits() const { return x_; }
  std::uint64_t z_bits() const { return z_; }

  Pauli at(std::size_t q) const;
  void set(std::size_t q, Pauli p);

  std::size_t weight() const;
  bool is_identity() const { return (x_ | z_) == 0; }
  /// Only I and Z letters.
  bool is_diagonal() const { return x_ == 0; }
  std::uint64_t support() const { return x_ | z_; }

  std::string str() const;

  bool operator==(const PauliString&) const = default;
  std::strong_ordering operator<=>(const PauliString& other) const;

 private:
  std::size_t n_qubits_;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

struct PauliProduct {
  Phase phase;
  PauliString string;
};

/// Operator product PQ as phase * R. Throws DimensionError on size mismatch.
PauliProduct multiply(const PauliString& p, const PauliString& q);

/// True iff on every qubit the letters agree or one of them is I.
bool qubitwise_compatible(const PauliString& p, const PauliString& q);

/// Action of a Pauli string on computational basis states.
///
/// Basis indices are big-endian in the qubit index: qubit q is bit
/// (n - 1 - q) of the index. Then P|r> = i^y_count * (-1)^popcount(r & sign_mask)
/// |r ^ flip_mask>.
struct BasisAction {
  std::uint64_t flip_mask = 0;
  std::uint64_t sign_mask = 0;
  Phase y_phase;

  std::complex<double> amplitude(std::uint64_t r) const;
};

BasisAction basis_action(const PauliString& p);

}  // namespace hevqe::pauli

template <>
struct std::hash<hevqe::pauli::PauliString> {
  std::size_t operator()(const hevqe::pauli::PauliString& p) const noexcept;
};
