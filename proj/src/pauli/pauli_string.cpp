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

#include "hevqe/pauli/pauli_string.hpp"

#include <bit>

#include "hevqe/common/errors.hpp"
#include "hevqe/common/random.hpp"

namespace hevqe::pauli {

char to_char(Pauli p) {
  static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
  return kLetters[static_cast<int>(p)];
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I':
      return Pauli::I;
    case 'X':
      return Pauli::X;
    case 'Y':
      return Pauli::Y;
    case 'Z':
      return Pauli::Z;
    default:
      throw InvalidArgument(std::string("invalid Pauli letter '") + c + "'");
  }
}

std::complex<double> Phase::value() const {
  switch (power & 3u) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

PauliString::PauliString(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits == 0 || n_qubits > kMaxQubits) {
    throw InvalidArgument("PauliString supports 1.." +
                          std::to_string(kMaxQubits) + " qubits, got " +
                          std::to_string(n_qubits));
  }
}

PauliString::PauliString(std::size_t n_qubits, std::uint64_t x_bits,
                         std::uint64_t z_bits)
    : PauliString(n_qubits) {
  const std::uint64_t mask =
      n_qubits == 64 ? ~0ULL : ((1ULL << n_qubits) - 1ULL);
  if ((x_bits | z_bits) & ~mask) {
    throw InvalidArgument("Pauli bits outside the qubit range");
  }
  x_ = x_bits;
  z_ = z_bits;
}

PauliString PauliString::from_string(std::string_view letters) {
  PauliString p(letters.size());
  for (std::size_t q = 0; q < letters.size(); ++q) {
    p.set(q, pauli_from_char(letters[q]));
  }
  return p;
}

Pauli PauliString::at(std::size_t q) const {
  const unsigned x = (x_ >> q) & 1u;
  const unsigned z = (z_ >> q) & 1u;
  if (x && z) return Pauli::Y;
  if (x) return Pauli::X;
  if (z) return Pauli::Z;
  return Pauli::I;
}

void PauliString::set(std::size_t q, Pauli p) {
  if (q >= n_qubits_) throw InvalidArgument("qubit index out of range");
  const std::uint64_t bit = 1ULL << q;
  x_ &= ~bit;
  z_ &= ~bit;
  if (p == Pauli::X || p == Pauli::Y) x_ |= bit;
  if (p == Pauli::Z || p == Pauli::Y) z_ |= bit;
}

std::size_t PauliString::weight() const {
  return static_cast<std::size_t>(std::popcount(x_ | z_));
}

std::string PauliString::str() const {
  std::string s(n_qubits_, 'I');
  for (std::size_t q = 0; q < n_qubits_; ++q) s[q] = to_char(at(q));
  return s;
}

std::strong_ordering PauliString::operator<=>(const PauliString& other) const {
  if (auto c = n_qubits_ <=> other.n_qubits_; c != 0) return c;
  for (std::size_t q = 0; q < n_qubits_; ++q) {
    const auto a = static_cast<int>(at(q));
    const auto b = static_cast<int>(other.at(q));
    if (a != b) return a <=> b;
  }
  return std::strong_ordering::equal;
}

namespace {

// Exponent of i in sigma_a * sigma_b for single-qubit letters.
constexpr std::uint8_t kProductPhase[4][4] = {
    // I  X  Y  Z
    {0, 0, 0, 0},  // I
    {0, 0, 1, 3},  // X: XY = iZ, XZ = -iY
    {0, 3, 0, 1},  // Y: YX = -iZ, YZ = iX
    {0, 1, 3, 0},  // Z: ZX = iY, ZY = -iX
};

}  // namespace

PauliProduct multiply(const PauliString& p, const PauliString& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw DimensionError("multiply: " + std::to_string(p.num_qubits()) +
                         " vs " + std::to_string(q.num_qubits()) + " qubits");
  }
  unsigned power = 0;
  std::uint64_t overlap = p.support() & q.support();
  while (overlap) {
    const auto k = static_cast<std::size_t>(std::countr_zero(overlap));
    overlap &= overlap - 1;
    power += kProductPhase[static_cast<int>(p.at(k))][static_cast<int>(q.at(k))];
  }
  return {Phase{static_cast<std::uint8_t>(power & 3u)},
          PauliString(p.num_qubits(), p.x_bits() ^ q.x_bits(),
                      p.z_bits() ^ q.z_bits())};
}

bool qubitwise_compatible(const PauliString& p, const PauliString& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw DimensionError("qubitwise_compatible: qubit count mismatch");
  }
  const std::uint64_t both = p.support() & q.support();
  return ((p.x_bits() ^ q.x_bits()) & both) == 0 &&
         ((p.z_bits() ^ q.z_bits()) & both) == 0;
}

std::complex<double> BasisAction::amplitude(std::uint64_t r) const {
  auto value = y_phase.value();
  return (std::popcount(r & sign_mask) & 1) ? -value : value;
}

BasisAction basis_action(const PauliString& p) {
  BasisAction action;
  const std::size_t n = p.num_qubits();
  for (std::size_t q = 0; q < n; ++q) {
    const std::uint64_t bit = 1ULL << (n - 1 - q);
    const Pauli letter = p.at(q);
    if (letter == Pauli::X || letter == Pauli::Y) action.flip_mask |= bit;
    if (letter == Pauli::Z || letter == Pauli::Y) action.sign_mask |= bit;
  }
  // Y = i X Z, so each Y contributes a factor i.
  const auto n_y = std::popcount(p.x_bits() & p.z_bits());
  action.y_phase = Phase{static_cast<std::uint8_t>(n_y & 3)};
  return action;
}

}  // namespace hevqe::pauli

std::size_t std::hash<hevqe::pauli::PauliString>::operator()(
    const hevqe::pauli::PauliString& p) const noexcept {
  return hevqe::mix_seed(p.x_bits() ^ (p.num_qubits() << 58),
                         p.z_bits());
}
