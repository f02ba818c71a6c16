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

#include "hevqe/fermion/encoding.hpp"

#include <bit>
#include <cmath>
#include <unordered_map>

#include "hevqe/common/errors.hpp"

namespace hevqe::fermion {

using pauli::PauliString;

std::string to_string(EncodingScheme scheme) {
  switch (scheme) {
    case EncodingScheme::jordan_wigner:
      return "jordan_wigner";
    case EncodingScheme::parity:
      return "parity";
    case EncodingScheme::binary_tree:
      return "binary_tree";
  }
  return "unknown";
}

EncodingScheme encoding_from_string(std::string_view name) {
  if (name == "jordan_wigner") return EncodingScheme::jordan_wigner;
  if (name == "parity") return EncodingScheme::parity;
  if (name == "binary_tree") return EncodingScheme::binary_tree;
  throw InvalidArgument("unknown encoding scheme '" + std::string(name) +
                        "' (expected jordan_wigner, parity or binary_tree)");
}

namespace {

// Binary-tree rows for size n (power of two), built by the doubling rule
// [[B, 0], [L, B]] where L only has its last row filled with ones.
std::vector<std::uint64_t> binary_tree_rows(std::size_t n) {
  std::vector<std::uint64_t> rows{1};
  for (std::size_t size = 1; size < n; size *= 2) {
    std::vector<std::uint64_t> next(2 * size, 0);
    for (std::size_t k = 0; k < size; ++k) {
      next[k] = rows[k];
      next[size + k] = rows[k] << size;
    }
    next[2 * size - 1] |= (std::uint64_t{1} << size) - 1;
    rows = std::move(next);
  }
  return rows;
}

// Inverse over GF(2) by Gauss-Jordan elimination on bitmask rows.
std::vector<std::uint64_t> invert_gf2(std::vector<std::uint64_t> a) {
  const std::size_t n = a.size();
  std::vector<std::uint64_t> inv(n);
  for (std::size_t k = 0; k < n; ++k) inv[k] = std::uint64_t{1} << k;
  for (std::size_t col = 0; col < n; ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    std::size_t pivot = col;
    while (pivot < n && !(a[pivot] & bit)) ++pivot;
    if (pivot == n) throw Error("encoding matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != col && (a[r] & bit)) {
        a[r] ^= a[col];
        inv[r] ^= inv[col];
      }
    }
  }
  return inv;
}

using SumMap = std::unordered_map<PauliString, std::complex<double>>;

std::vector<ComplexPauliTerm> multiply_sums(
    const std::vector<ComplexPauliTerm>& lhs,
    const std::vector<ComplexPauliTerm>& rhs) {
  SumMap acc;
  for (const auto& l : lhs) {
    for (const auto& r : rhs) {
      const auto product = pauli::multiply(l.string, r.string);
      acc[product.string] += l.coefficient * r.coefficient * product.phase.value();
    }
  }
  std::vector<ComplexPauliTerm> out;
  out.reserve(acc.size());
  for (auto& [string, coefficient] : acc) {
    if (std::abs(coefficient) > 1e-15) out.push_back({coefficient, string});
  }
  return out;
}

class LadderTable {
 public:
  LadderTable(EncodingScheme scheme, std::size_t n) : n_(n) {
    const auto a = encoding_matrix(scheme, n);
    const auto a_inv = invert_gf2(a);
    std::uint64_t lower_parity = 0;  // sum of rows i < j of A^-1
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t flip = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (a[k] >> j & 1u) flip |= std::uint64_t{1} << k;
      }
      const PauliString sign(n, 0, lower_parity);
      const PauliString flip_x(n, flip, 0);
      const PauliString occupation(n, 0, a_inv[j]);
      // a+_j = X_flip * (I + Z_occupation)/2 * Z_sign
      const std::vector<ComplexPauliTerm> projector{
          {0.5, PauliString(n)}, {0.5, occupation}};
      auto create = multiply_sums(
          multiply_sums({{1.0, flip_x}}, projector), {{1.0, sign}});
      auto annihilate = multiply_sums(
          multiply_sums({{1.0, sign}}, projector), {{1.0, flip_x}});
      creation_.push_back(std::move(create));
      annihilation_.push_back(std::move(annihilate));
      lower_parity ^= a_inv[j];
    }
  }

  const std::vector<ComplexPauliTerm>& create(std::size_t j) const {
    return creation_[j];
  }
  const std::vector<ComplexPauliTerm>& annihilate(std::size_t j) const {
    return annihilation_[j];
  }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<std::vector<ComplexPauliTerm>> creation_;
  std::vector<std::vector<ComplexPauliTerm>> annihilation_;
};

}  // namespace

std::vector<std::uint64_t> encoding_matrix(EncodingScheme scheme,
                                           std::size_t n_modes) {
  if (n_modes == 0 || n_modes > PauliString::kMaxQubits) {
    throw InvalidArgument("mode count " + std::to_string(n_modes) +
                          " outside 1.." +
                          std::to_string(PauliString::kMaxQubits));
  }
  std::vector<std::uint64_t> rows(n_modes, 0);
  switch (scheme) {
    case EncodingScheme::jordan_wigner:
      for (std::size_t k = 0; k < n_modes; ++k) rows[k] = std::uint64_t{1} << k;
      break;
    case EncodingScheme::parity:
      for (std::size_t k = 0; k < n_modes; ++k) {
        rows[k] = k + 1 == 64 ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << (k + 1)) - 1;
      }
      break;
    case EncodingScheme::binary_tree:
      if (!std::has_single_bit(n_modes)) {
        throw InvalidArgument("binary_tree encoding needs a power-of-two mode "
                              "count, got " + std::to_string(n_modes));
      }
      rows = binary_tree_rows(n_modes);
      break;
  }
  return rows;
}

std::vector<ComplexPauliTerm> ladder_operator(EncodingScheme scheme,
                                              std::size_t n_modes,
                                              std::size_t mode, bool creation) {
  if (mode >= n_modes) throw InvalidArgument("mode index out of range");
  const LadderTable table(scheme, n_modes);
  return creation ? table.create(mode) : table.annihilate(mode);
}

pauli::QubitHamiltonian encode(const FermionHamiltonian& h,
                               EncodingScheme scheme) {
  const std::size_t m = h.num_modes();
  const LadderTable ladder(scheme, m);
  SumMap acc;
  auto add = [&acc](const std::vector<ComplexPauliTerm>& terms, double scale) {
    for (const auto& term : terms) acc[term.string] += scale * term.coefficient;
  };

  std::vector<std::vector<ComplexPauliTerm>> hop(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      hop[a * m + b] = multiply_sums(ladder.create(a), ladder.annihilate(b));
      const double t = h.t(a, b);
      if (t != 0.0) add(hop[a * m + b], t);
    }
  }

  // a+_a a+_c a_d a_b = a+_a a_b a+_c a_d - delta_cb a+_a a_d
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t d = 0; d < m; ++d) {
          const double u = h.u(a, b, c, d);
          if (u == 0.0) continue;
          if ((a == c) || (b == d)) continue;  // a+_a a+_a = 0, a_b a_b = 0
          add(multiply_sums(hop[a * m + b], hop[c * m + d]), 0.5 * u);
          if (c == b) add(hop[a * m + d], -0.5 * u);
        }
      }
    }
  }

  std::vector<pauli::PauliTerm> terms;
  terms.reserve(acc.size());
  for (const auto& [string, coefficient] : acc) {
    if (std::abs(coefficient.imag()) > 1e-10) {
      throw Error("encoded Hamiltonian has imaginary coefficient " +
                  std::to_string(coefficient.imag()) + " on " + string.str());
    }
    terms.push_back({coefficient.real(), string});
  }
  return pauli::QubitHamiltonian(m, std::move(terms), h.shift());
}

}  // namespace hevqe::fermion
