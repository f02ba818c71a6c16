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

// Dense reference constructions built directly from matrices, used to check
// the library's bit-level and kernel-level implementations.

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "hevqe/common/random.hpp"

namespace oracle {

using cd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline Matrix pauli(char letter) {
  Matrix m(2, 2);
  switch (letter) {
    case 'X':
      m << 0, 1, 1, 0;
      break;
    case 'Y':
      m << 0, cd(0, -1), cd(0, 1), 0;
      break;
    case 'Z':
      m << 1, 0, 0, -1;
      break;
    default:
      m.setIdentity();
  }
  return m;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Kronecker product of the letters, leftmost letter as the leftmost factor.
inline Matrix pauli_string(const std::string& letters) {
  Matrix out = Matrix::Identity(1, 1);
  for (char c : letters) out = kron(out, pauli(c));
  return out;
}

/// Single-qubit operator `op` embedded on qubit q of an n-qubit register.
inline Matrix embed(const Matrix& op, std::size_t q, std::size_t n) {
  Matrix out = Matrix::Identity(1, 1);
  for (std::size_t k = 0; k < n; ++k) out = kron(out, k == q ? op : Matrix(pauli('I')));
  return out;
}

inline Matrix expi(const Matrix& generator, double angle) {
  // exp(-i angle/2 G) for a Hermitian generator.
  Matrix a = cd(0, -angle / 2.0) * generator;
  return a.exp();
}

inline Matrix rz(double t) { return expi(pauli('Z'), t); }
inline Matrix rx(double t) { return expi(pauli('X'), t); }

/// Fock-space annihilation operator on M modes. Basis index bits are
/// occupations with mode 0 as the most significant bit; the sign counts
/// occupied modes with a smaller index.
inline Eigen::MatrixXd annihilation(std::size_t mode, std::size_t n_modes) {
  const std::size_t dim = std::size_t{1} << n_modes;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t s = 0; s < dim; ++s) {
    const std::size_t bit = std::size_t{1} << (n_modes - 1 - mode);
    if (!(s & bit)) continue;
    int before = 0;
    for (std::size_t k = 0; k < mode; ++k) before += (s >> (n_modes - 1 - k)) & 1u;
    a(s ^ bit, s) = (before % 2) ? -1.0 : 1.0;
  }
  return a;
}

/// Occupation count of the Fock basis state s.
inline int occupation(std::size_t s, std::size_t first, std::size_t last, std::size_t n_modes) {
  int count = 0;
  for (std::size_t k = first; k < last; ++k) count += (s >> (n_modes - 1 - k)) & 1u;
  return count;
}

/// sum t_ab a+_a a_b + 1/2 sum u_abcd a+_a a+_c a_d a_b + shift, built from
/// explicit Fock-space matrices.
template <typename Ham>
Eigen::MatrixXd fock_hamiltonian(const Ham& h) {
  const std::size_t m = h.num_modes();
  const std::size_t dim = std::size_t{1} << m;
  std::vector<Eigen::MatrixXd> a(m), ad(m);
  for (std::size_t k = 0; k < m; ++k) {
    a[k] = annihilation(k, m);
    ad[k] = a[k].transpose();
  }
  Eigen::MatrixXd out = h.shift() * Eigen::MatrixXd::Identity(dim, dim);
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      if (h.t(p, q) != 0.0) out += h.t(p, q) * ad[p] * a[q];
    }
  }
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t s = 0; s < m; ++s) {
          const double u = h.u(p, q, r, s);
          if (u != 0.0) out += 0.5 * u * ad[p] * ad[r] * a[s] * a[q];
        }
      }
    }
  }
  return out;
}

/// Random real symmetric matrix with entries drawn from N(0, 1).
inline Eigen::MatrixXd random_symmetric(std::size_t n, hevqe::Rng& rng) {
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) m(i, j) = m(j, i) = rng.normal();
  }
  return m;
}

/// Random chemists'-notation tensor with the 8-fold real-orbital symmetry.
inline std::vector<double> random_eri(std::size_t n, hevqe::Rng& rng, double scale = 0.5) {
  std::vector<double> eri(n * n * n * n, 0.0);
  auto idx = [n](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    return ((a * n + b) * n + c) * n + d;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b <= a; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d <= c; ++d) {
          if (idx(a, b, 0, 0) < idx(c, d, 0, 0)) continue;
          const double v = scale * rng.normal();
          for (auto [p, q] : {std::pair{a, b}, std::pair{b, a}})
            for (auto [r, s] : {std::pair{c, d}, std::pair{d, c}}) {
              eri[idx(p, q, r, s)] = v;
              eri[idx(r, s, p, q)] = v;
            }
        }
  return eri;
}

/// Haar-random pure state drawn independently of the library.
inline Vector random_state(std::size_t n_qubits, hevqe::Rng& rng) {
  Vector v(std::size_t{1} << n_qubits);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = cd(rng.normal(), rng.normal());
  return v.normalized();
}

}  // namespace oracle
