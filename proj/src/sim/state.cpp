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

#include "hevqe/sim/state.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Eigenvalues>

#include "hevqe/common/errors.hpp"

namespace hevqe::sim {

using cd = std::complex<double>;

namespace {

void check_size(std::size_t n) {
  if (n == 0) throw DimensionError("register needs at least one qubit");
  if (n > kMaxQubits) {
    throw ResourceError(std::to_string(n) + " qubits exceed the dense limit of " +
                        std::to_string(kMaxQubits));
  }
}

// Row offsets of the 2^k local basis states and the list of base indices with
// all local bits cleared.
struct LocalIndex {
  std::vector<Eigen::Index> offsets;
  std::vector<Eigen::Index> bases;
};

LocalIndex local_index(std::size_t n, const std::vector<std::size_t>& qubits,
                       Eigen::Index op_dim) {
  const std::size_t k = qubits.size();
  if (k == 0 || op_dim != (Eigen::Index{1} << k)) {
    throw DimensionError("operator dimension does not match " +
                         std::to_string(k) + " qubits");
  }
  std::uint64_t mask = 0;
  std::vector<std::uint64_t> bits(k);
  for (std::size_t t = 0; t < k; ++t) {
    if (qubits[t] >= n) {
      throw DimensionError("qubit " + std::to_string(qubits[t]) +
                           " out of range for " + std::to_string(n) + " qubits");
    }
    bits[t] = std::uint64_t{1} << (n - 1 - qubits[t]);
    if (mask & bits[t]) throw DimensionError("repeated qubit in gate");
    mask |= bits[t];
  }
  LocalIndex index;
  index.offsets.resize(std::size_t{1} << k);
  for (std::size_t s = 0; s < index.offsets.size(); ++s) {
    std::uint64_t off = 0;
    for (std::size_t t = 0; t < k; ++t) {
      if (s >> (k - 1 - t) & 1u) off |= bits[t];
    }
    index.offsets[s] = static_cast<Eigen::Index>(off);
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & mask) == 0) index.bases.push_back(static_cast<Eigen::Index>(i));
  }
  return index;
}

// m <- op * m acting on the local rows.
void left_apply(Eigen::MatrixXcd& m, const LocalIndex& idx,
                const Eigen::MatrixXcd& op) {
  const auto d = static_cast<Eigen::Index>(idx.offsets.size());
  Eigen::VectorXcd v(d);
  for (Eigen::Index col = 0; col < m.cols(); ++col) {
    for (Eigen::Index base : idx.bases) {
      for (Eigen::Index s = 0; s < d; ++s) v(s) = m(base + idx.offsets[s], col);
      for (Eigen::Index r = 0; r < d; ++r) {
        cd acc = 0.0;
        for (Eigen::Index s = 0; s < d; ++s) acc += op(r, s) * v(s);
        m(base + idx.offsets[r], col) = acc;
      }
    }
  }
}

// m <- m * op^dagger acting on the local columns.
void right_apply_adjoint(Eigen::MatrixXcd& m, const LocalIndex& idx,
                         const Eigen::MatrixXcd& op) {
  const auto d = static_cast<Eigen::Index>(idx.offsets.size());
  Eigen::VectorXcd v(d);
  for (Eigen::Index base : idx.bases) {
    for (Eigen::Index row = 0; row < m.rows(); ++row) {
      for (Eigen::Index s = 0; s < d; ++s) v(s) = m(row, base + idx.offsets[s]);
      for (Eigen::Index c = 0; c < d; ++c) {
        cd acc = 0.0;
        for (Eigen::Index s = 0; s < d; ++s) acc += v(s) * std::conj(op(c, s));
        m(row, base + idx.offsets[c]) = acc;
      }
    }
  }
}

}  // namespace

DensityMatrix::DensityMatrix(std::size_t n_qubits) : n_qubits_(n_qubits) {
  check_size(n_qubits);
  const auto dim = static_cast<Eigen::Index>(dimension());
  data_ = Eigen::MatrixXcd::Zero(dim, dim);
  data_(0, 0) = 1.0;
}

DensityMatrix::DensityMatrix(std::size_t n_qubits, Eigen::MatrixXcd data)
    : n_qubits_(n_qubits), data_(std::move(data)) {
  check_size(n_qubits);
  const auto dim = static_cast<Eigen::Index>(dimension());
  if (data_.rows() != dim || data_.cols() != dim) {
    throw DimensionError("density matrix must be " + std::to_string(dim) +
                         " x " + std::to_string(dim));
  }
}

double DensityMatrix::purity() const {
  return (data_ * data_).trace().real();
}

DensityMatrix init_state(std::size_t n_qubits) {
  return DensityMatrix(n_qubits);
}

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits) {
  check_size(n_qubits);
  amplitudes_ = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_qubits);
  amplitudes_(0) = 1.0;
}

StateVector::StateVector(std::size_t n_qubits, Eigen::VectorXcd amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  check_size(n_qubits);
  if (amplitudes_.size() != (Eigen::Index{1} << n_qubits)) {
    throw DimensionError("state vector length does not match qubit count");
  }
}

DensityMatrix StateVector::to_density_matrix() const {
  return DensityMatrix(n_qubits_, amplitudes_ * amplitudes_.adjoint());
}

void apply_unitary(DensityMatrix& rho, const std::vector<std::size_t>& qubits,
                   const Eigen::MatrixXcd& op) {
  const LocalIndex idx = local_index(rho.num_qubits(), qubits, op.rows());
  left_apply(rho.data(), idx, op);
  right_apply_adjoint(rho.data(), idx, op);
}

void apply_unitary(StateVector& psi, const std::vector<std::size_t>& qubits,
                   const Eigen::MatrixXcd& op) {
  const LocalIndex idx = local_index(psi.num_qubits(), qubits, op.rows());
  Eigen::MatrixXcd column = psi.amplitudes();
  left_apply(column, idx, op);
  psi.amplitudes() = column;
}

void apply_kraus(DensityMatrix& rho, const std::vector<std::size_t>& qubits,
                 const std::vector<Eigen::MatrixXcd>& kraus) {
  if (kraus.empty()) throw InvalidArgument("empty Kraus set");
  const LocalIndex idx = local_index(rho.num_qubits(), qubits, kraus[0].rows());
  Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(rho.data().rows(), rho.data().cols());
  for (const auto& op : kraus) {
    if (op.rows() != kraus[0].rows() || op.cols() != op.rows()) {
      throw DimensionError("Kraus operators must share one square shape");
    }
    Eigen::MatrixXcd term = rho.data();
    left_apply(term, idx, op);
    right_apply_adjoint(term, idx, op);
    total += term;
  }
  rho.data() = std::move(total);
}

Eigen::Matrix2cd rz(double theta) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = std::polar(1.0, -theta / 2);
  m(1, 1) = std::polar(1.0, theta / 2);
  return m;
}

Eigen::Matrix2cd rx(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Eigen::Matrix2cd m;
  m << c, cd(0, -s), cd(0, -s), c;
  return m;
}

Eigen::Matrix2cd ry(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Eigen::Matrix2cd m;
  m << c, -s, s, c;
  return m;
}

Eigen::Matrix2cd euler_matrix(double theta1, double theta2, double theta3) {
  return rz(theta1) * rx(theta2) * rz(theta3);
}

void apply_euler(DensityMatrix& rho, std::size_t qubit, double theta1,
                 double theta2, double theta3) {
  apply_unitary(rho, {qubit}, euler_matrix(theta1, theta2, theta3));
}

void apply_euler(StateVector& psi, std::size_t qubit, double theta1,
                 double theta2, double theta3) {
  apply_unitary(psi, {qubit}, euler_matrix(theta1, theta2, theta3));
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<std::size_t>& keep) {
  const std::size_t n = rho.num_qubits();
  const std::size_t k = keep.size();
  std::vector<std::size_t> traced;
  for (std::size_t q = 0; q < n; ++q) {
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) traced.push_back(q);
  }
  if (k == 0 || traced.size() + k != n) {
    throw DimensionError("partial trace needs distinct kept qubits in range");
  }
  auto bit = [n](std::size_t q) { return std::uint64_t{1} << (n - 1 - q); };
  auto embed = [&](std::uint64_t local, const std::vector<std::size_t>& qs) {
    std::uint64_t full = 0;
    for (std::size_t t = 0; t < qs.size(); ++t) {
      if (local >> (qs.size() - 1 - t) & 1u) full |= bit(qs[t]);
    }
    return full;
  };
  const auto dk = static_cast<Eigen::Index>(1) << k;
  const std::uint64_t dt = std::uint64_t{1} << traced.size();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dk, dk);
  for (Eigen::Index r = 0; r < dk; ++r) {
    for (Eigen::Index c = 0; c < dk; ++c) {
      const std::uint64_t rr = embed(static_cast<std::uint64_t>(r), keep);
      const std::uint64_t cc = embed(static_cast<std::uint64_t>(c), keep);
      cd acc = 0.0;
      for (std::uint64_t e = 0; e < dt; ++e) {
        const std::uint64_t env = embed(e, traced);
        acc += rho.data()(static_cast<Eigen::Index>(rr | env),
                          static_cast<Eigen::Index>(cc | env));
      }
      out(r, c) = acc;
    }
  }
  return DensityMatrix(k, std::move(out));
}

double concurrence(const DensityMatrix& rho) {
  if (rho.num_qubits() != 2) throw DimensionError("concurrence needs two qubits");
  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const Eigen::Matrix4cd r = rho.data();
  const Eigen::Matrix4cd tilde = yy * r.conjugate() * yy;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> root(r);
  Eigen::Vector4d root_values = root.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Eigen::Matrix4cd sqrt_rho =
      root.eigenvectors() * root_values.cast<cd>().asDiagonal() * root.eigenvectors().adjoint();
  const Eigen::Matrix4cd m = sqrt_rho * tilde * sqrt_rho;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(0.5 * (m + m.adjoint()),
                                                         Eigen::EigenvaluesOnly);
  constexpr double kRoundoff = 1e-13;
  std::vector<double> lambda;
  for (Eigen::Index i = 0; i < 4; ++i) {
    const double value = solver.eigenvalues()(i);
    lambda.push_back(value > kRoundoff ? std::sqrt(value) : 0.0);
  }
  std::sort(lambda.rbegin(), lambda.rend());
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

double entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.data());
  double s = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double p = solver.eigenvalues()(i);
    if (p > 1e-14) s -= p * std::log2(p);
  }
  return s;
}

}  // namespace hevqe::sim
