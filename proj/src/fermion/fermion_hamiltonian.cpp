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

#include "hevqe/fermion/fermion_hamiltonian.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "hevqe/common/errors.hpp"

namespace hevqe::fermion {

namespace {

std::string describe(std::size_t a, std::size_t b, std::size_t c,
                     std::size_t d) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + "," + std::to_string(d) + ")";
}

}  // namespace

FermionHamiltonian::FermionHamiltonian(Eigen::MatrixXd one_body,
                                       std::vector<double> two_body,
                                       double shift, double tolerance)
    : n_modes_(static_cast<std::size_t>(one_body.rows())),
      one_body_(std::move(one_body)),
      two_body_(std::move(two_body)),
      shift_(shift) {
  const std::size_t m = n_modes_;
  if (m == 0 || one_body_.cols() != one_body_.rows()) {
    throw InvalidArgument("one-body matrix must be square and non-empty");
  }
  if (m % 2 != 0) {
    throw InvalidArgument("odd number of spin orbitals (" + std::to_string(m) +
                          "); spin layout requires an even count");
  }
  if (two_body_.size() != m * m * m * m) {
    throw DimensionError("two-body tensor has " +
                         std::to_string(two_body_.size()) +
                         " entries, expected M^4 = " +
                         std::to_string(m * m * m * m));
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (std::abs(t(a, b) - t(b, a)) > tolerance) {
        throw SymmetryError("one-body integrals not symmetric at (" +
                            std::to_string(a) + "," + std::to_string(b) + ")");
      }
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t d = 0; d < m; ++d) {
          const double v = u(a, b, c, d);
          if (std::abs(v - u(b, a, c, d)) > tolerance ||
              std::abs(v - u(a, b, d, c)) > tolerance ||
              std::abs(v - u(c, d, a, b)) > tolerance) {
            throw SymmetryError("two-body integrals lack eight-fold symmetry at " +
                                describe(a, b, c, d));
          }
        }
      }
    }
  }
}

FermionHamiltonian FermionHamiltonian::from_spatial(
    const Eigen::MatrixXd& h, const std::vector<double>& eri, double shift) {
  const auto n = static_cast<std::size_t>(h.rows());
  const std::size_t m = 2 * n;
  if (eri.size() != n * n * n * n) {
    throw DimensionError("spatial two-body tensor must have n^4 entries");
  }
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m),
                                            static_cast<Eigen::Index>(m));
  std::vector<double> u(m * m * m * m, 0.0);
  auto spatial = [n](std::size_t p) { return p % n; };
  auto spin = [n](std::size_t p) { return p / n; };
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      if (spin(p) == spin(q)) {
        t(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q)) =
            h(static_cast<Eigen::Index>(spatial(p)),
              static_cast<Eigen::Index>(spatial(q)));
      }
    }
  }
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      if (spin(p) != spin(q)) continue;
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t s = 0; s < m; ++s) {
          if (spin(r) != spin(s)) continue;
          u[((p * m + q) * m + r) * m + s] =
              eri[((spatial(p) * n + spatial(q)) * n + spatial(r)) * n +
                  spatial(s)];
        }
      }
    }
  }
  return FermionHamiltonian(std::move(t), std::move(u), shift);
}

// ---------------------------------------------------------------------------
// FCIDUMP reader

namespace {

constexpr double kFileSymmetryTolerance = 1e-8;

struct Header {
  std::optional<long> norb;
  std::optional<long> nelec;
  long ms2 = 0;
  bool spin_orbitals = false;
};

std::string upper(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return s;
}

Header parse_header(const std::string& text, const std::string& source,
                    std::size_t line) {
  Header header;
  static const std::regex kPair(R"(([A-Z0-9_]+)\s*=\s*([^\s,]+))");
  const std::string normalized = upper(text);
  for (auto it = std::sregex_iterator(normalized.begin(), normalized.end(), kPair);
       it != std::sregex_iterator(); ++it) {
    const std::string key = (*it)[1];
    const std::string value = (*it)[2];
    auto as_long = [&]() {
      try {
        std::size_t used = 0;
        long v = std::stol(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
      } catch (const std::exception&) {
        throw ParseError(source, line, "bad value for " + key + ": '" + value + "'");
      }
    };
    if (key == "NORB") {
      header.norb = as_long();
    } else if (key == "NELEC") {
      header.nelec = as_long();
    } else if (key == "MS2") {
      header.ms2 = as_long();
    } else if (key == "SPINORB") {
      header.spin_orbitals = value == ".TRUE." || value == "T" ||
                             value == "TRUE" || value == "1";
    }
  }
  if (!header.norb || *header.norb <= 0) {
    throw ParseError(source, line, "header lacks a positive NORB");
  }
  if (!header.nelec || *header.nelec < 0) {
    throw ParseError(source, line, "header lacks a non-negative NELEC");
  }
  return header;
}

bool starts_with_number(const std::string& line) {
  std::istringstream in(line);
  std::string token;
  if (!(in >> token)) return false;
  const char c = token[0];
  return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' ||
         c == '.';
}

// Stores values on permutation orbits and rejects inconsistent duplicates.
class SymmetricFill {
 public:
  SymmetricFill(std::size_t size, std::string source)
      : values_(size, 0.0), filled_(size, false), source_(std::move(source)) {}

  void assign(const std::vector<std::size_t>& orbit, double value,
              std::size_t line, const std::string& what) {
    for (std::size_t index : orbit) {
      if (filled_[index] &&
          std::abs(values_[index] - value) > kFileSymmetryTolerance) {
        throw SymmetryError(source_ + ":" + std::to_string(line) + ": " + what +
                            " = " + std::to_string(value) +
                            " conflicts with symmetric entry " +
                            std::to_string(values_[index]));
      }
    }
    for (std::size_t index : orbit) {
      values_[index] = value;
      filled_[index] = true;
    }
  }

  std::vector<double> take() { return std::move(values_); }

 private:
  std::vector<double> values_;
  std::vector<bool> filled_;
  std::string source_;
};

}  // namespace

IntegralFile load_integrals(std::istream& in, const std::string& source) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);

  std::size_t cursor = 0;
  while (cursor < lines.size() &&
         lines[cursor].find_first_not_of(" \t\r") == std::string::npos) {
    ++cursor;
  }
  if (cursor == lines.size() ||
      upper(lines[cursor]).find("&FCI") == std::string::npos) {
    throw ParseError(source, cursor + 1, "expected '&FCI' header");
  }
  const std::size_t header_line = cursor + 1;
  std::string header_text;
  while (cursor < lines.size()) {
    const std::string current = upper(lines[cursor]);
    const bool terminated = current.find("&END") != std::string::npos ||
                            current.find('/') != std::string::npos;
    header_text += " " + lines[cursor];
    ++cursor;
    if (terminated) break;
    if (cursor < lines.size() && starts_with_number(lines[cursor])) break;
  }
  const Header header = parse_header(header_text, source, header_line);

  const auto norb = static_cast<std::size_t>(*header.norb);
  if (header.spin_orbitals && norb % 2 != 0) {
    throw InvalidArgument(source + ": odd number of spin orbitals (" +
                          std::to_string(norb) + ")");
  }
  const std::size_t n = norb;
  SymmetricFill one(n * n, source);
  SymmetricFill two(n * n * n * n, source);
  std::optional<double> shift;

  for (; cursor < lines.size(); ++cursor) {
    std::string line = lines[cursor];
    const std::size_t line_no = cursor + 1;
    for (auto& ch : line) {
      if (ch == 'D' || ch == 'd') ch = 'E';
    }
    std::istringstream fields(line);
    double value = 0.0;
    long idx[4];
    if (!(fields >> value)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw ParseError(source, line_no, "expected `value i j k l`");
    }
    for (auto& k : idx) {
      if (!(fields >> k)) throw ParseError(source, line_no, "expected four indices");
      if (k < 0 || static_cast<std::size_t>(k) > n) {
        throw ParseError(source, line_no,
                         "index " + std::to_string(k) + " outside 0.." +
                             std::to_string(n));
      }
    }
    if (std::string extra; fields >> extra) {
      throw ParseError(source, line_no, "unexpected trailing field '" + extra + "'");
    }
    const auto i = static_cast<std::size_t>(idx[0]);
    const auto j = static_cast<std::size_t>(idx[1]);
    const auto k = static_cast<std::size_t>(idx[2]);
    const auto l = static_cast<std::size_t>(idx[3]);
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      if (shift && std::abs(*shift - value) > kFileSymmetryTolerance) {
        throw ParseError(source, line_no, "conflicting scalar shift");
      }
      shift = value;
    } else if (k == 0 && l == 0) {
      if (i == 0 || j == 0) throw ParseError(source, line_no, "bad one-body indices");
      const std::size_t a = i - 1, b = j - 1;
      one.assign({a * n + b, b * n + a}, value, line_no,
                 "t(" + std::to_string(i) + "," + std::to_string(j) + ")");
    } else {
      if (i == 0 || j == 0 || k == 0 || l == 0) {
        throw ParseError(source, line_no, "bad two-body indices");
      }
      const std::size_t a = i - 1, b = j - 1, c = k - 1, d = l - 1;
      auto at = [n](std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
        return ((p * n + q) * n + r) * n + s;
      };
      two.assign({at(a, b, c, d), at(b, a, c, d), at(a, b, d, c), at(b, a, d, c),
                  at(c, d, a, b), at(d, c, a, b), at(c, d, b, a), at(d, c, b, a)},
                 value, line_no, "u" + describe(i, j, k, l));
    }
  }

  Eigen::MatrixXd h(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  const std::vector<double> one_values = one.take();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      h(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
          one_values[a * n + b];
    }
  }
  std::vector<double> eri = two.take();
  if (header.spin_orbitals) {
    return {FermionHamiltonian(std::move(h), std::move(eri), shift.value_or(0.0)),
            static_cast<int>(*header.nelec), static_cast<int>(header.ms2)};
  }
  return {FermionHamiltonian::from_spatial(h, eri, shift.value_or(0.0)),
          static_cast<int>(*header.nelec), static_cast<int>(header.ms2)};
}

IntegralFile load_integrals_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open integral file '" + path + "'");
  return load_integrals(in, path);
}

// ---------------------------------------------------------------------------
// Orbital rotation and frozen core

namespace {

std::vector<double> rotate_two_body(const std::vector<double>& u,
                                    const Eigen::MatrixXd& rotation,
                                    std::size_t m) {
  // u'_{abcd} = sum_{pqrs} R_pa R_qb R_rc R_sd u_pqrs, one index at a time.
  std::vector<double> current = u;
  std::vector<double> next(u.size(), 0.0);
  const std::size_t stride[4] = {m * m * m, m * m, m, 1};
  for (int axis = 0; axis < 4; ++axis) {
    std::fill(next.begin(), next.end(), 0.0);
    const std::size_t s = stride[axis];
    for (std::size_t flat = 0; flat < current.size(); ++flat) {
      const double v = current[flat];
      if (v == 0.0) continue;
      const std::size_t p = (flat / s) % m;
      const std::size_t base = flat - p * s;
      for (std::size_t a = 0; a < m; ++a) {
        const double r = rotation(static_cast<Eigen::Index>(p),
                                  static_cast<Eigen::Index>(a));
        if (r != 0.0) next[base + a * s] += r * v;
      }
    }
    std::swap(current, next);
  }
  return current;
}

}  // namespace

BogoliubovResult bogoliubov_diagonalize(const FermionHamiltonian& h) {
  const std::size_t m = h.num_modes();
  const std::size_t half = m / 2;
  const Eigen::MatrixXd& t = h.one_body();
  for (std::size_t a = 0; a < half; ++a) {
    for (std::size_t b = half; b < m; ++b) {
      if (std::abs(t(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b))) >
          FermionHamiltonian::kSymmetryTolerance) {
        throw InvalidArgument("one-body term couples spin up and spin down modes");
      }
    }
  }
  const auto mi = static_cast<Eigen::Index>(m);
  const auto hi = static_cast<Eigen::Index>(half);
  Eigen::MatrixXd rotation = Eigen::MatrixXd::Zero(mi, mi);
  Eigen::VectorXd energies(mi);
  for (Eigen::Index block = 0; block < 2; ++block) {
    const Eigen::Index offset = block * hi;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        t.block(offset, offset, hi, hi));
    Eigen::MatrixXd vectors = solver.eigenvectors();
    for (Eigen::Index col = 0; col < hi; ++col) {
      Eigen::Index pivot = 0;
      vectors.col(col).cwiseAbs().maxCoeff(&pivot);
      if (vectors(pivot, col) < 0) vectors.col(col) *= -1.0;
    }
    rotation.block(offset, offset, hi, hi) = vectors;
    energies.segment(offset, hi) = solver.eigenvalues();
  }
  Eigen::MatrixXd dressed_t = energies.asDiagonal();
  std::vector<double> dressed_u = rotate_two_body(h.two_body(), rotation, m);
  return {rotation, energies,
          FermionHamiltonian(std::move(dressed_t), std::move(dressed_u), h.shift())};
}

namespace {

void check_frozen_set(const std::set<std::size_t>& frozen, std::size_t m) {
  const std::size_t half = m / 2;
  for (std::size_t f : frozen) {
    if (f >= m) {
      throw InvalidArgument("frozen mode " + std::to_string(f) +
                            " outside 0.." + std::to_string(m - 1));
    }
    const std::size_t partner = f < half ? f + half : f - half;
    if (!frozen.contains(partner)) {
      throw InvalidArgument("frozen mode " + std::to_string(f) +
                            " is missing its spin partner " +
                            std::to_string(partner));
    }
  }
  if (frozen.size() == m) throw InvalidArgument("cannot freeze every mode");
}

}  // namespace

FermionHamiltonian freeze_core(const FermionHamiltonian& h,
                               const std::set<std::size_t>& frozen) {
  const std::size_t m = h.num_modes();
  check_frozen_set(frozen, m);
  if (frozen.empty()) return h;

  std::vector<long> relabel(m, -1);
  std::size_t kept = 0;
  for (std::size_t p = 0; p < m; ++p) {
    if (!frozen.contains(p)) relabel[p] = static_cast<long>(kept++);
  }
  auto in_f = [&](std::size_t p) { return relabel[p] < 0; };
  auto nu = [&](std::size_t p) { return static_cast<Eigen::Index>(relabel[p]); };

  double shift = h.shift();
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(kept),
                                            static_cast<Eigen::Index>(kept));
  std::vector<double> u(kept * kept * kept * kept, 0.0);

  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const double v = h.t(a, b);
      if (!in_f(a) && !in_f(b)) {
        t(nu(a), nu(b)) += v;
      } else if (a == b) {
        shift += v;  // filled mode: n_f -> 1
      }
    }
  }

  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t d = 0; d < m; ++d) {
          const double v = h.u(a, b, c, d);
          if (v == 0.0) continue;
          const bool fa = in_f(a), fb = in_f(b), fc = in_f(c), fd = in_f(d);
          const int count = fa + fb + fc + fd;
          const double half_v = 0.5 * v;
          if (count == 0) {
            u[((relabel[a] * kept + relabel[b]) * kept + relabel[c]) * kept +
              relabel[d]] += v;
          } else if (count == 2) {
            if (a == b && fa && !fc && !fd) {
              t(nu(c), nu(d)) += half_v;
            } else if (c == d && fc && !fa && !fb) {
              t(nu(a), nu(b)) += half_v;
            } else if (a == d && fa && !fb && !fc) {
              t(nu(c), nu(b)) -= half_v;
            } else if (c == b && fc && !fa && !fd) {
              t(nu(a), nu(d)) -= half_v;
            }
          } else if (count == 4) {
            if (a == b && c == d && a != c) {
              shift += half_v;
            } else if (a == d && c == b && a != c) {
              shift -= half_v;
            }
          }
          // Odd counts and the remaining patterns change the occupation of a
          // frozen mode and vanish on the projected subspace.
        }
      }
    }
  }
  return FermionHamiltonian(std::move(t), std::move(u), shift);
}

std::vector<std::string> frozen_core_warnings(
    const FermionHamiltonian& h, const std::set<std::size_t>& frozen) {
  std::vector<std::string> warnings;
  double u_max = 0.0;
  for (double v : h.two_body()) u_max = std::max(u_max, std::abs(v));
  for (std::size_t f : frozen) {
    if (f >= h.num_modes()) continue;
    const double omega = h.t(f, f);
    if (-omega < 10.0 * u_max) {
      warnings.push_back("frozen mode " + std::to_string(f) + " has energy " +
                         std::to_string(omega) +
                         " not well below the largest two-body magnitude " +
                         std::to_string(u_max));
    }
    for (std::size_t p = 0; p < h.num_modes(); ++p) {
      if (p != f && !frozen.contains(p) && std::abs(h.t(f, p)) > 1e-8) {
        warnings.push_back("one-body coupling between frozen mode " +
                           std::to_string(f) + " and mode " +
                           std::to_string(p) + " is dropped");
        break;
      }
    }
  }
  return warnings;
}

}  // namespace hevqe::fermion
