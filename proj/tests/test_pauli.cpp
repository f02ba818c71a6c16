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

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "hevqe/common/errors.hpp"
#include "hevqe/fermion/tapering.hpp"
#include "hevqe/pauli/dense.hpp"
#include "hevqe/pauli/grouping.hpp"
#include "support/oracles.hpp"

using namespace hevqe;
using namespace hevqe::pauli;

namespace {

std::vector<std::string> all_strings(std::size_t n) {
  std::vector<std::string> out{""};
  for (std::size_t q = 0; q < n; ++q) {
    std::vector<std::string> next;
    for (const auto& s : out)
      for (char c : std::string("IXYZ")) next.push_back(s + c);
    out = next;
  }
  return out;
}

QubitHamiltonian random_hamiltonian(std::size_t n, std::size_t n_terms, Rng& rng) {
  auto strings = all_strings(n);
  strings.erase(strings.begin());  // identity
  std::vector<PauliTerm> terms;
  std::set<std::size_t> used;
  while (terms.size() < n_terms) {
    const std::size_t pick = rng.next_u64() % strings.size();
    if (!used.insert(pick).second) continue;
    terms.push_back({rng.normal(), PauliString::from_string(strings[pick])});
  }
  return QubitHamiltonian(n, terms, rng.normal());
}

/// Minimum number of qubitwise-compatible sets by exhaustive backtracking.
std::size_t optimal_partition(const QubitHamiltonian& h) {
  const auto& terms = h.terms();
  std::size_t best = terms.size();
  std::vector<std::vector<std::size_t>> sets;
  std::function<void(std::size_t)> place = [&](std::size_t i) {
    if (sets.size() >= best) return;
    if (i == terms.size()) {
      best = sets.size();
      return;
    }
    for (std::size_t k = 0; k < sets.size(); ++k) {
      const bool fits = std::all_of(sets[k].begin(), sets[k].end(), [&](std::size_t j) {
        return qubitwise_compatible(terms[i].string, terms[j].string);
      });
      if (fits) {
        sets[k].push_back(i);
        place(i + 1);
        sets[k].pop_back();
      }
    }
    sets.push_back({i});
    place(i + 1);
    sets.pop_back();
  };
  place(0);
  return best;
}

}  // namespace

TEST(PauliMultiply, SingleQubitRelations) {
  auto x = PauliString::from_string("X");
  auto y = PauliString::from_string("Y");
  auto xx = multiply(x, x);
  EXPECT_EQ(xx.phase.power, 0);
  EXPECT_TRUE(xx.string.is_identity());
  auto xy = multiply(x, y);
  EXPECT_EQ(xy.phase.value(), std::complex<double>(0, 1));
  EXPECT_EQ(xy.string.str(), "Z");
}

TEST(PauliMultiply, TwoQubitProductMatchesMatrices) {
  auto p = PauliString::from_string("XZ");
  auto q = PauliString::from_string("ZX");
  auto r = multiply(p, q);
  EXPECT_EQ(r.string.str(), "YY");
  const oracle::Matrix expected = oracle::pauli_string("XZ") * oracle::pauli_string("ZX");
  EXPECT_LT((r.phase.value() * oracle::pauli_string(r.string.str()) - expected).norm(), 1e-12);
}

TEST(PauliMultiply, AllProductsMatchMatricesAndAssociate) {
  for (std::size_t n : {1u, 2u}) {
    const auto strings = all_strings(n);
    for (const auto& a : strings) {
      for (const auto& b : strings) {
        auto ab = multiply(PauliString::from_string(a), PauliString::from_string(b));
        const oracle::Matrix m = oracle::pauli_string(a) * oracle::pauli_string(b);
        ASSERT_LT((ab.phase.value() * oracle::pauli_string(ab.string.str()) - m).norm(), 1e-12)
            << a << "*" << b;
        for (const auto& c : strings) {
          const auto pc = PauliString::from_string(c);
          auto left = multiply(ab.string, pc);
          auto bc = multiply(PauliString::from_string(b), pc);
          auto right = multiply(PauliString::from_string(a), bc.string);
          ASSERT_EQ(left.string, right.string);
          ASSERT_EQ((ab.phase * left.phase).power, (bc.phase * right.phase).power);
        }
      }
    }
  }
}

TEST(PauliMultiply, SizeMismatchThrows) {
  EXPECT_THROW(multiply(PauliString::from_string("X"), PauliString::from_string("XX")),
               DimensionError);
  EXPECT_THROW(qubitwise_compatible(PauliString::from_string("X"),
                                    PauliString::from_string("XX")),
               DimensionError);
}

TEST(PauliString, ParsingAndLetters) {
  auto p = PauliString::from_string("XYZI");
  EXPECT_EQ(p.at(0), Pauli::X);
  EXPECT_EQ(p.at(1), Pauli::Y);
  EXPECT_EQ(p.at(2), Pauli::Z);
  EXPECT_EQ(p.at(3), Pauli::I);
  EXPECT_EQ(p.weight(), 3u);
  EXPECT_EQ(p.str(), "XYZI");
  EXPECT_THROW(PauliString::from_string("XQ"), InvalidArgument);
  EXPECT_LT(PauliString::from_string("IZ"), PauliString::from_string("XI"));
}

TEST(PauliString, BasisActionMatchesMatrix) {
  for (const auto& s : all_strings(3)) {
    const auto p = PauliString::from_string(s);
    const auto action = basis_action(p);
    const oracle::Matrix m = oracle::pauli_string(s);
    for (std::uint64_t r = 0; r < 8; ++r) {
      const auto target = r ^ action.flip_mask;
      ASSERT_LT(std::abs(m(static_cast<Eigen::Index>(target), static_cast<Eigen::Index>(r)) -
                         action.amplitude(r)),
                1e-12)
          << s;
    }
  }
}

TEST(QubitwiseCompatible, Examples) {
  auto c = [](const char* a, const char* b) {
    return qubitwise_compatible(PauliString::from_string(a), PauliString::from_string(b));
  };
  EXPECT_TRUE(c("ZI", "IZ"));
  EXPECT_TRUE(c("XX", "XI"));
  EXPECT_FALSE(c("XX", "ZZ"));
}

TEST(QubitHamiltonian, MergesPrunesAndShifts) {
  QubitHamiltonian h(2,
                     {{0.5, PauliString::from_string("ZI")},
                      {0.25, PauliString::from_string("ZI")},
                      {1e-14, PauliString::from_string("XX")},
                      {2.0, PauliString::from_string("II")}},
                     1.0);
  ASSERT_EQ(h.size(), 1u);
  EXPECT_DOUBLE_EQ(h.terms()[0].coefficient, 0.75);
  EXPECT_DOUBLE_EQ(h.identity_shift(), 3.0);
}

TEST(QubitHamiltonian, TextRoundTripAndErrors) {
  Rng rng(3);
  const auto h = random_hamiltonian(3, 10, rng);
  const auto back = QubitHamiltonian::from_text(h.to_text());
  ASSERT_EQ(back.size(), h.size());
  EXPECT_DOUBLE_EQ(back.identity_shift(), h.identity_shift());
  for (std::size_t i = 0; i < h.size(); ++i) {
    EXPECT_EQ(back.terms()[i].string, h.terms()[i].string);
    EXPECT_DOUBLE_EQ(back.terms()[i].coefficient, h.terms()[i].coefficient);
  }
  const auto commented = QubitHamiltonian::from_text("# header\n\n0.5\tZX\n-1\tII\n");
  EXPECT_EQ(commented.size(), 1u);
  EXPECT_DOUBLE_EQ(commented.identity_shift(), -1.0);
  EXPECT_THROW(QubitHamiltonian::from_text("0.5\tZX\n0.1\tZ\n"), ParseError);
  EXPECT_THROW(QubitHamiltonian::from_text("abc\tZX\n"), ParseError);
  EXPECT_THROW(QubitHamiltonian::from_text("0.5\tZQ\n"), ParseError);
}

TEST(Dense, SmallExamples) {
  QubitHamiltonian z(1, {{1.0, PauliString::from_string("Z")}});
  Eigen::MatrixXcd expected_z(2, 2);
  expected_z << 1, 0, 0, -1;
  EXPECT_LT((to_matrix(z) - expected_z).norm(), 1e-15);
  EXPECT_DOUBLE_EQ(ground_energy(z), -1.0);

  QubitHamiltonian xx(2, {{0.5, PauliString::from_string("XX")}});
  const auto m = to_matrix(xx);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_DOUBLE_EQ(m(i, j).real(), i + j == 3 ? 0.5 : 0.0);

  QubitHamiltonian heis(2, {{1.0, PauliString::from_string("XX")},
                            {1.0, PauliString::from_string("YY")},
                            {1.0, PauliString::from_string("ZZ")}});
  const auto spec = spectrum(heis);
  EXPECT_NEAR(spec(0), -3.0, 1e-12);
  for (int i = 1; i < 4; ++i) EXPECT_NEAR(spec(i), 1.0, 1e-12);
}

TEST(Dense, MatchesKroneckerOracle) {
  Rng rng(5);
  const auto h = random_hamiltonian(4, 30, rng);
  oracle::Matrix expected =
      h.identity_shift() * oracle::Matrix::Identity(16, 16);
  for (const auto& t : h.terms()) expected += t.coefficient * oracle::pauli_string(t.string.str());
  const auto m = to_matrix(h);
  EXPECT_LT((m - expected).norm(), 1e-12);
  EXPECT_LT((m - m.adjoint()).norm(), 1e-12);
}

TEST(Dense, ShiftInvarianceAndLimit) {
  Rng rng(6);
  const auto h = random_hamiltonian(3, 12, rng);
  for (double c : {-2.5, 0.0, 3.75}) {
    EXPECT_NEAR(ground_energy(h.with_shift(c)), ground_energy(h) + c, 1e-10);
  }
  QubitHamiltonian big(13, {{1.0, PauliString(13, 0, 1)}});
  EXPECT_THROW(to_matrix(big), ResourceError);
  EXPECT_NO_THROW(to_matrix(QubitHamiltonian(3, {{1.0, PauliString(3, 0, 1)}}), 3));
}

TEST(Dense, TraceAgainstTermExpectations) {
  Rng rng(7);
  const auto h = random_hamiltonian(3, 15, rng);
  oracle::Matrix a(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) a(i, j) = {rng.normal(), rng.normal()};
  oracle::Matrix rho = a * a.adjoint();
  rho /= rho.trace();
  std::complex<double> sum = h.identity_shift();
  for (const auto& t : h.terms()) sum += t.coefficient * (rho * to_matrix(t.string)).trace();
  EXPECT_NEAR((rho * to_matrix(h)).trace().real(), sum.real(), 1e-10);
}

TEST(Grouping, DiagonalTermsFormOneSet) {
  QubitHamiltonian h(2, {{1.0, PauliString::from_string("ZI")},
                         {0.5, PauliString::from_string("IZ")},
                         {0.25, PauliString::from_string("ZZ")}});
  const auto g = group_tpb(h);
  EXPECT_EQ(g.num_sets(), 1u);
  EXPECT_EQ(g.bases[0].str(), "ZZ");
}

TEST(Grouping, PartitionIsValidDeterministicAndNearOptimal) {
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const auto h = random_hamiltonian(4, 20, rng);
    const auto g = group_tpb(h);
    ASSERT_TRUE(is_valid_grouping(h, g));
    std::vector<int> seen(h.size(), 0);
    for (const auto& set : g.sets)
      for (std::size_t i : set) ++seen[i];
    for (int s : seen) ASSERT_EQ(s, 1);
    for (std::size_t s = 0; s < g.num_sets(); ++s)
      for (std::size_t i : g.sets[s])
        for (std::size_t j : g.sets[s])
          ASSERT_TRUE(qubitwise_compatible(h.terms()[i].string, h.terms()[j].string));
    const auto again = group_tpb(h);
    EXPECT_EQ(again.sets, g.sets);
    EXPECT_LE(optimal_partition(h), g.num_sets());
  }
}

TEST(Grouping, FirstFitOrderIsByDescendingMagnitude) {
  QubitHamiltonian h(1, {{0.1, PauliString::from_string("X")},
                         {-2.0, PauliString::from_string("Z")},
                         {0.5, PauliString::from_string("Y")}});
  const auto g = group_tpb(h);
  ASSERT_EQ(g.num_sets(), 3u);
  EXPECT_EQ(g.bases[0].str(), "Z");
  EXPECT_EQ(g.bases[1].str(), "Y");
  EXPECT_EQ(g.bases[2].str(), "X");
}

TEST(Grouping, HydrogenHasTwoSets) {
  fermion::MoleculeOptions options;
  const auto mapped = fermion::map_molecule(
      fermion::load_integrals_file(std::string(HEVQE_DATA_DIR) + "/h2_sto3g_0.735.fcidump"),
      options);
  EXPECT_EQ(mapped.hamiltonian.size(), 4u);
  EXPECT_EQ(group_tpb(mapped.hamiltonian).num_sets(), 2u);
}
