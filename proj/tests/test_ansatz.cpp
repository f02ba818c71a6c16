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

#include <cmath>
#include <numbers>
#include <set>

#include <gtest/gtest.h>

#include "hevqe/ansatz/ansatz.hpp"
#include "hevqe/common/errors.hpp"
#include "support/fixtures.hpp"

using namespace hevqe;
using namespace hevqe::ansatz;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> random_angles(std::size_t count, Rng& rng) {
  std::vector<double> theta(count);
  for (auto& v : theta) v = kPi * (2 * rng.uniform() - 1);
  return theta;
}

double z_expectation(const sim::DensityMatrix& rho, std::size_t q) {
  double z = 0.0;
  const std::size_t n = rho.num_qubits();
  for (std::size_t s = 0; s < rho.dimension(); ++s) {
    const bool one = (s >> (n - 1 - q)) & 1u;
    z += (one ? -1.0 : 1.0) * rho.data()(s, s).real();
  }
  return z;
}

}  // namespace

TEST(Topology, ExperimentalLayouts) {
  EXPECT_EQ(Topology::experimental_2q().num_edges(), 1u);
  EXPECT_EQ(Topology::experimental_4q().num_edges(), 3u);
  EXPECT_EQ(Topology::experimental_4q().layers.size(), 2u);
  EXPECT_EQ(Topology::experimental_6q().num_edges(), 5u);
  EXPECT_EQ(Topology::experimental_6q().layers.size(), 3u);
  EXPECT_EQ(Topology::by_name("experimental", 4).name, "experimental_4q");
  EXPECT_THROW(Topology::by_name("experimental", 3), InvalidArgument);
  EXPECT_THROW(Topology::by_name("ring", 3), InvalidArgument);
}

TEST(Topology, AllToAllCoversEveryPairOnce) {
  for (std::size_t n : {2u, 3u, 4u, 5u, 6u}) {
    const auto topology = Topology::all_to_all(n);
    std::set<Edge> seen;
    for (const auto& layer : topology.layers) {
      std::set<std::size_t> used;
      for (const auto& [c, t] : layer) {
        EXPECT_LT(c, t);
        EXPECT_TRUE(used.insert(c).second);
        EXPECT_TRUE(used.insert(t).second);
        EXPECT_TRUE(seen.insert({c, t}).second);
      }
    }
    EXPECT_EQ(seen.size(), n * (n - 1) / 2);
    EXPECT_EQ(topology.layers.size(), n % 2 == 0 ? n - 1 : n);
  }
}

TEST(Parameters, CountsAndLayout) {
  AnsatzConfig config;
  config.n_qubits = 4;
  config.topology = Topology::experimental_4q();
  for (std::size_t d : {0u, 1u, 3u}) {
    config.depth = d;
    config.variant = Variant::full_euler;
    EXPECT_EQ(parameter_count(config), 4 * (3 * d + 2));
    const auto layout = parameter_layout(config);
    ASSERT_EQ(layout.size(), parameter_count(config));
    EXPECT_EQ(layout[0].axis, Axis::x);
    EXPECT_EQ(layout[1].axis, Axis::z_outer);
    if (d > 0) {
      EXPECT_EQ(layout[8].layer, 1u);
      EXPECT_EQ(layout[8].axis, Axis::z_outer);
      EXPECT_EQ(layout[9].axis, Axis::x);
      EXPECT_EQ(layout[10].axis, Axis::z_inner);
      EXPECT_EQ(layout[11].qubit, 1u);
    }
    config.variant = Variant::reduced_zz;
    EXPECT_EQ(parameter_count(config), 2 * 4 * (d + 1));
  }
}

TEST(Parameters, InitialAnglesAndJsonRoundTrip) {
  AnsatzConfig config;
  config.depth = 2;
  Rng rng(41);
  const auto theta = initial_parameters(config, rng);
  const auto layout = parameter_layout(config);
  for (std::size_t k = 0; k < theta.size(); ++k) {
    if (layout[k].axis == Axis::x) EXPECT_DOUBLE_EQ(theta[k], kPi / 2);
  }
  EXPECT_EQ(parameters_from_json(parameters_to_json(theta)), theta);
  EXPECT_THROW(parameters_from_json("{\"a\": 1}"), ParseError);
  EXPECT_THROW(parameters_from_json("[1, \"x\"]"), ParseError);
  EXPECT_THROW(parameters_from_json("[1,"), ParseError);
}

TEST(Entangler, TemplateTerms) {
  const auto zz = EntanglerTemplate::ideal_zz(kPi / 2).terms();
  ASSERT_EQ(zz.size(), 1u);
  EXPECT_DOUBLE_EQ(zz.at("ZZ"), kPi / 2);
  const auto cr = EntanglerTemplate::cr_measured(kPi / 4).terms();
  EXPECT_DOUBLE_EQ(cr.at("ZX"), kPi / 4);
  EXPECT_NEAR(cr.at("IX"), kPi / 4 * 0.68 / 1.04, 1e-14);
  EXPECT_NEAR(cr.at("ZY"), kPi / 4 * 0.07 / 1.04, 1e-14);
  const auto raw = EntanglerTemplate::cr_measured(std::nullopt).terms();
  EXPECT_NEAR(raw.at("ZX"), 2 * kPi * 1.04e6 * 150e-9, 1e-12);
  EXPECT_EQ(entangler_kind_from_string(to_string(EntanglerTemplate::Kind::ideal_zx)),
            EntanglerTemplate::Kind::ideal_zx);
  EXPECT_THROW(entangler_kind_from_string("cz"), InvalidArgument);
}

TEST(Circuit, MatchesDenseOracle) {
  Rng rng(42);
  struct Case {
    std::size_t n;
    Topology topology;
    EntanglerTemplate entangler;
    Variant variant;
  };
  const std::vector<Case> cases{
      {2, Topology::experimental_2q(), EntanglerTemplate::cr_measured(), Variant::full_euler},
      {2, Topology::experimental_2q(), EntanglerTemplate::ideal_zz(kPi / 2), Variant::reduced_zz},
      {4, Topology::experimental_4q(), EntanglerTemplate::ideal_zx(0.8), Variant::full_euler},
      {3, Topology::all_to_all(3), EntanglerTemplate::cr_measured(std::nullopt), Variant::full_euler},
  };
  for (const auto& c : cases) {
    for (std::size_t d : {0u, 1u, 2u}) {
      AnsatzConfig config{c.n, d, c.topology, c.entangler, c.variant};
      const AnsatzCircuit circuit(config);
      const auto theta = random_angles(circuit.num_parameters(), rng);
      const oracle::Vector expected = fixture::ansatz_state(config, theta);
      const auto psi = circuit.prepare_pure_state(theta);
      EXPECT_NEAR(std::abs(expected.dot(psi.amplitudes())), 1.0, 1e-10);
      EXPECT_LT((psi.amplitudes() - expected).norm(), 1e-10);
      const auto rho = circuit.prepare_state(theta);
      EXPECT_LT((rho.data() - expected * expected.adjoint()).norm(), 1e-10);
    }
  }
}

TEST(Circuit, RejectsInconsistentConfigs) {
  AnsatzConfig config;
  config.n_qubits = 3;
  config.topology = Topology::custom({{{0, 3}, 0}});
  EXPECT_THROW(AnsatzCircuit{config}, Error);
  config.topology = Topology::custom({{{0, 1}, 0}, {{1, 2}, 0}});
  EXPECT_THROW(AnsatzCircuit{config}, Error);
  config.topology = Topology::experimental_2q();
  config.n_qubits = 2;
  const AnsatzCircuit circuit(config);
  EXPECT_THROW(circuit.prepare_state({0.1, 0.2}), DimensionError);
}

TEST(Circuit, DepolarizingShrinksSingleQubitBlochVectors) {
  Rng rng(43);
  AnsatzConfig config;
  config.depth = 0;
  const double xi = 0.12;
  const auto theta = random_angles(parameter_count(config), rng);
  const auto pure = AnsatzCircuit(config).prepare_state(theta);
  const auto noisy = AnsatzCircuit(config, sim::NoiseModel::depolarizing(xi)).prepare_state(theta);
  for (std::size_t q = 0; q < 2; ++q) {
    EXPECT_NEAR(z_expectation(noisy, q), (1 - 4 * xi / 3) * z_expectation(pure, q), 1e-12);
  }
  EXPECT_LT(noisy.purity(), pure.purity());
}

TEST(Circuit, ThermalRelaxationOfFlippedQubits) {
  AnsatzConfig config;
  config.depth = 0;
  // X rotation by pi prepares |1> on both qubits.
  std::vector<double> theta{kPi, 0.0, kPi, 0.0};
  auto noise = sim::NoiseModel::thermal(40e-6, 30e-6);
  noise.single_qubit_duration = 2e-6;
  const auto rho = AnsatzCircuit(config, noise).prepare_state(theta);
  const double excited = std::exp(-2e-6 / 40e-6);
  EXPECT_NEAR(z_expectation(rho, 0), 1 - 2 * excited, 1e-12);
  EXPECT_NEAR(rho.trace(), 1.0, 1e-12);

  // Longer entangler duration strictly lowers the purity of an entangled state.
  config.depth = 1;
  Rng rng(44);
  const auto angles = random_angles(parameter_count(config), rng);
  auto fast = sim::NoiseModel::thermal(40e-6, 30e-6);
  auto slow = fast;
  slow.entangler_duration = 450e-9;
  EXPECT_GT(AnsatzCircuit(config, fast).prepare_state(angles).purity(),
            AnsatzCircuit(config, slow).prepare_state(angles).purity());
}

TEST(Circuit, FiniteDifferencesMatchAnalyticDerivative) {
  Rng rng(45);
  AnsatzConfig config;
  config.depth = 1;
  const auto h = fixture::random_qubit_hamiltonian(2, 8, rng);
  const oracle::Matrix hm = fixture::dense(h);
  const AnsatzCircuit circuit(config);
  auto energy = [&](const std::vector<double>& theta) {
    const oracle::Vector psi = circuit.prepare_pure_state(theta).amplitudes();
    return (psi.adjoint() * hm * psi)(0).real();
  };
  const auto theta = random_angles(circuit.num_parameters(), rng);
  const oracle::Vector psi = fixture::ansatz_state(config, theta);
  const double step = 1e-5;
  for (std::size_t k = 0; k < theta.size(); ++k) {
    const oracle::Vector dpsi = fixture::ansatz_state(config, theta, k);
    const double analytic = 2.0 * (dpsi.adjoint() * hm * psi)(0).real();
    auto plus = theta, minus = theta;
    plus[k] += step;
    minus[k] -= step;
    EXPECT_NEAR((energy(plus) - energy(minus)) / (2 * step), analytic, 1e-6) << k;
  }
}

TEST(Circuit, PreparesBellStateWithQuarterTurnEntangler) {
  AnsatzConfig config;
  config.depth = 1;
  config.entangler = EntanglerTemplate::ideal_zx(kPi / 2);
  std::vector<double> theta(parameter_count(config), 0.0);
  // Qubit 0: X = pi/2 then Z = pi/2 gives |+>; qubit 1 stays |0>.
  theta[0] = kPi / 2;
  theta[1] = kPi / 2;
  const auto rho = AnsatzCircuit(config).prepare_state(theta);
  EXPECT_NEAR(sim::concurrence(rho), 1.0, 1e-12);
  const oracle::Vector psi = fixture::ansatz_state(config, theta);
  EXPECT_LT((rho.data() - psi * psi.adjoint()).norm(), 1e-12);
}
