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
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace hevqe::fermion {

/// Second-quantized Hamiltonian
///   H = shift + sum t_ab a+_a a_b + 1/2 sum u_abcd a+_a a+_c a_d a_b
/// with two-body integrals in chemists' notation. Modes [0, M/2) are spin up
/// and [M/2, M) spin down.
class FermionHamiltonian {
 public:
  static constexpr double kSymmetryTolerance = 1e-10;

  /// `two_body` is the row-major M^4 tensor u[((a*M + b)*M + c)*M + d].
  /// Throws SymmetryError when t is not symmetric or u lacks the real
  /// eight-fold symmetry, InvalidArgument for odd or zero M.
  FermionHamiltonian(Eigen::MatrixXd one_body, std::vector<double> two_body,
                     double shift,
                     double tolerance = kSymmetryTolerance);

  std::size_t num_modes() const { return n_modes_; }
  const Eigen::MatrixXd& one_body() const { return one_body_; }
  const std::vector<double>& two_body() const { return two_body_; }
  double shift() const { return shift_; }

  double t(std::size_t a, std::size_t b) const { return one_body_(a, b); }
  double u(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return two_body_[index(a, b, c, d)];
  }

  std::size_t index(std::size_t a, std::size_t b, std::size_t c,
                    std::size_t d) const {
    return ((a * n_modes_ + b) * n_modes_ + c) * n_modes_ + d;
  }

  /// Spin-orbital Hamiltonian from spatial integrals h_ij and (ij|kl):
  /// mode i is orbital i spin up, mode i + n is orbital i spin down.
  static FermionHamiltonian from_spatial(const Eigen::MatrixXd& h,
                                         const std::vector<double>& eri,
                                         double shift);

 private:
  std::size_t n_modes_;
  Eigen::MatrixXd one_body_;
  std::vector<double> two_body_;
  double shift_;
};

/// Contents of an FCIDUMP-style integral file.
struct IntegralFile {
  FermionHamiltonian hamiltonian;
  int n_electrons = 0;
  int ms2 = 0;
};

/// Reads `&FCI NORB=.. NELEC=.. MS2=..` followed by `value i j k l` lines
/// (1-indexed chemists' notation; `i j 0 0` one-body, `0 0 0 0` scalar).
/// NORB counts spatial orbitals unless the header sets SPINORB=.TRUE., in
/// which case indices are spin orbitals. Entries related by permutation
/// symmetry that disagree by more than 1e-8 raise SymmetryError.
IntegralFile load_integrals(std::istream& in,
                            const std::string& source = "<input>");
IntegralFile load_integrals_file(const std::string& path);

struct BogoliubovResult {
  /// Orthogonal M x M matrix whose columns are the dressed modes.
  Eigen::MatrixXd rotation;
  /// One-body energies of the dressed modes, ascending within each spin block.
  Eigen::VectorXd energies;
  FermionHamiltonian dressed;
};

/// Rotates the modes so the one-body part is diagonal. Each spin block is
/// diagonalized separately; one-body couplings between the blocks raise
/// InvalidArgument.
BogoliubovResult bogoliubov_diagonalize(const FermionHamiltonian& h);

/// Projects H onto states with every mode of `frozen` occupied and returns
/// the effective Hamiltonian on the remaining modes (relabelled in order).
/// `frozen` must contain spin partners together (a and a + M/2).
FermionHamiltonian freeze_core(const FermionHamiltonian& h,
                               const std::set<std::size_t>& frozen);

/// Validity warnings for freezing: modes whose one-body energy is not well
/// below the largest two-body magnitude.
std::vector<std::string> frozen_core_warnings(
    const FermionHamiltonian& h, const std::set<std::size_t>& frozen);

}  // namespace hevqe::fermion
