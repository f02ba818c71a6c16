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
#include <filesystem>
#include <numbers>

#include <gtest/gtest.h>

#include "hevqe/common/errors.hpp"
#include "hevqe/estimate/estimator.hpp"
#include "hevqe/experiments/studies.hpp"
#include "hevqe/pauli/dense.hpp"
#include "support/fixtures.hpp"

using namespace hevqe;
using namespace hevqe::experiments;

namespace {

constexpr double kPi = std::numbers::pi;

const pauli::QubitHamiltonian& hydrogen() {
  static const pauli::QubitHamiltonian h =
      fermion::map_molecule(
          fermion::load_integrals_file(std::string(HEVQE_DATA_DIR) + "/h2_sto3g_0.735.fcidump"), {})
          .hamiltonian;
  return h;
}

/// Lowest energy of H over two-qubit product states, by a dense scan of the
/// Bloch angles followed by coordinate refinement.
double best_product_energy(const pauli::QubitHamiltonian& h) {
  const oracle::Matrix m = fixture::dense(h);
  auto energy = [&](double t0, double p0, double t1, double p1) {
    oracle::Vector a(2), b(2);
    a << std::cos(t0 / 2), std::polar(1.0, p0) * std::sin(t0 / 2);
    b << std::cos(t1 / 2), std::polar(1.0, p1) * std::sin(t1 / 2);
    const oracle::Vector psi = oracle::kron(a, b);
    return (psi.adjoint() * m * psi)(0).real();
  };
  double best = 1e300;
  double x[4] = {0, 0, 0, 0};
  const int grid = 24;
  for (int i = 0; i <= grid; ++i)
    for (int j = 0; j < grid; ++j)
      for (int k = 0; k <= grid; ++k)
        for (int l = 0; l < grid; ++l) {
          const double v = energy(kPi * i / grid, 2 * kPi * j / grid, kPi * k / grid,
                                  2 * kPi * l / grid);
          if (v < best) {
            best = v;
            x[0] = kPi * i / grid, x[1] = 2 * kPi * j / grid;
            x[2] = kPi * k / grid, x[3] = 2 * kPi * l / grid;
          }
        }
  for (double step = 0.1; step > 1e-9; step /= 2) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (int c = 0; c < 4; ++c) {
        for (double s : {step, -step}) {
          double y[4] = {x[0], x[1], x[2], x[3]};
          y[c] += s;
          const double v = energy(y[0], y[1], y[2], y[3]);
          if (v < best - 1e-15) {
            best = v;
            std::copy(y, y + 4, x);
            moved = true;
          }
        }
      }
    }
  }
  return best;
}

PipelineConfig quick_config(std::size_t n_qubits, std::size_t depth) {
  PipelineConfig config;
  config.ansatz.n_qubits = n_qubits;
  config.ansatz.depth = depth;
  config.ansatz.topology = ansatz::Topology::by_name("experimental", n_qubits);
  config.spsa.max_updates = 150;
  config.n_runs = 3;
  config.seed = 5;
  return config;
}

}  // namespace

TEST(Heisenberg, HamiltonianMatchesKroneckerConstruction) {
  HeisenbergConfig model;
  model.coupling = 0.7;
  model.field = -0.3;
  const auto h = heisenberg_hamiltonian(model);
  oracle::Matrix expected = oracle::Matrix::Zero(16, 16);
  for (const auto& [i, j] : model.edges) {
    for (char p : {'X', 'Y', 'Z'}) {
      std::string letters(4, 'I');
      letters[i] = letters[j] = p;
      expected += 0.7 * oracle::pauli_string(letters);
    }
  }
  for (std::size_t q = 0; q < 4; ++q) expected += -0.3 * oracle::embed(oracle::pauli('Z'), q, 4);
  EXPECT_LT((fixture::dense(h) - expected).norm(), 1e-12);

  HeisenbergConfig bad;
  bad.edges = {{0, 4}};
  EXPECT_THROW(heisenberg_hamiltonian(bad), InvalidArgument);
}

TEST(Heisenberg, KnownGroundEnergies) {
  HeisenbergConfig field_only;
  field_only.coupling = 0.0;
  EXPECT_NEAR(pauli::ground_energy(heisenberg_hamiltonian(field_only)), -4.0, 1e-12);
  HeisenbergConfig dimer{2, {{0, 1}}, 1.0, 0.0};
  EXPECT_NEAR(pauli::ground_energy(heisenberg_hamiltonian(dimer)), -3.0, 1e-12);
}

TEST(Heisenberg, Magnetization) {
  const sim::StateVector zero(3);
  EXPECT_EQ(z_expectations(zero), (std::vector<double>{1.0, 1.0, 1.0}));
  sim::StateVector mixed(2, oracle::Vector::Zero(4));
  mixed.amplitudes()(0b01) = 1.0;  // qubit 1 excited
  const auto z = z_expectations(mixed.to_density_matrix());
  EXPECT_DOUBLE_EQ(z[0], 1.0);
  EXPECT_DOUBLE_EQ(z[1], -1.0);
  EXPECT_DOUBLE_EQ(magnetization(z), 0.0);
  EXPECT_DOUBLE_EQ(magnetization(zero.to_density_matrix()), 1.0);
}

TEST(Statistics, PercentilesInterpolateLinearly) {
  const auto p = percentiles({5, 1, 4, 2, 3});
  EXPECT_DOUBLE_EQ(p.p50, 3.0);
  EXPECT_DOUBLE_EQ(p.p25, 2.0);
  EXPECT_DOUBLE_EQ(p.p5, 1.2);
  EXPECT_DOUBLE_EQ(p.p95, 4.8);
  EXPECT_DOUBLE_EQ(p.mean, 3.0);
  EXPECT_DOUBLE_EQ(percentiles({7}).p75, 7.0);
  EXPECT_THROW(percentiles({}), InvalidArgument);
}

TEST(Seeds, TaskSeedsSeparateEveryCoordinate) {
  const auto base = task_seed(1, "optimize", 0, 0);
  EXPECT_EQ(base, task_seed(1, "optimize", 0, 0));
  EXPECT_NE(base, task_seed(2, "optimize", 0, 0));
  EXPECT_NE(base, task_seed(1, "sweep", 0, 0));
  EXPECT_NE(base, task_seed(1, "optimize", 1, 0));
  EXPECT_NE(base, task_seed(1, "optimize", 0, 1));
}

TEST(Seeds, ParallelForRunsEveryTaskAndRethrows) {
  std::vector<int> hits(50, 0);
  parallel_for(50, 4, [&](std::size_t i) { hits[i] += 1; });
  EXPECT_EQ(hits, std::vector<int>(50, 1));
  const auto failing = [](std::size_t i) {
    if (i == 3) throw ResourceError("task failed");
  };
  EXPECT_THROW(parallel_for(10, 2, failing), ResourceError);
}

TEST(Pipeline, VariationalBoundAndReportRoundTrip) {
  const auto& h = hydrogen();
  auto config = quick_config(2, 1);
  const auto point = vqe_pipeline(h, config);
  ASSERT_EQ(point.runs.size(), 3u);
  EXPECT_NEAR(point.reference, pauli::ground_energy(h), 1e-12);
  for (const auto& run : point.runs) {
    EXPECT_GE(run.energy, point.reference - 1e-10);
    EXPECT_NEAR(run.error, run.energy - point.reference, 1e-12);
    EXPECT_GE(run.best_error, -1e-10);
    EXPECT_EQ(run.z.size(), 2u);
    EXPECT_EQ(run.std_error, 0.0);
  }

  ExperimentReport report;
  report.scenario = "optimize";
  report.seed = config.seed;
  report.points.push_back(point);
  const auto json = report.to_json();
  EXPECT_EQ(ExperimentReport::from_json(json).to_json().dump(), json.dump());
  const std::string csv = report.to_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "scenario,point,label,parameter,depth,run,seed,energy,std_error,reference,error,"
            "function_calls,magnetization");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
}

TEST(Pipeline, DeterministicAcrossThreadCounts) {
  const auto& h = hydrogen();
  auto config = quick_config(2, 1);
  config.sampling.mode = ObjectiveMode::noisy_sampled;
  config.sampling.shots = 200;
  config.sampling.final_shots = 2000;
  config.spsa.max_updates = 20;
  config.spsa.averaging_window = 5;
  config.noise = sim::NoiseModel::thermal(40e-6, 30e-6);
  config.keep_traces = true;
  auto dump = [&](std::size_t threads) {
    config.threads = threads;
    ExperimentReport report;
    report.points.push_back(vqe_pipeline(h, config));
    return report.to_json().dump();
  };
  const std::string one = dump(1);
  EXPECT_EQ(one, dump(1));
  EXPECT_EQ(one, dump(3));
}

TEST(Pipeline, FunctionBudgetCapsCalls) {
  auto config = quick_config(2, 1);
  config.function_budget = 300;
  const auto point = vqe_pipeline(hydrogen(), config);
  for (const auto& run : point.runs) EXPECT_LE(run.function_calls, 300u);
}

TEST(Pipeline, EscalationRaisesEffortWhenAboveThreshold) {
  auto config = quick_config(2, 1);
  config.n_runs = 1;
  config.spsa.max_updates = 10;
  config.spsa.averaging_window = 5;
  config.escalation.enabled = true;
  config.escalation.max_rounds = 2;
  config.escalation.threshold = 1e-9;
  const auto escalated = vqe_pipeline(hydrogen(), config);
  config.escalation.enabled = false;
  const auto single = vqe_pipeline(hydrogen(), config);
  EXPECT_GT(escalated.runs[0].function_calls, single.runs[0].function_calls);
}

TEST(Studies, ConcurrenceOfEntanglerTemplates) {
  EXPECT_NEAR(entangler_concurrence(ansatz::EntanglerTemplate::ideal_zx(kPi / 2)), 1.0, 1e-12);
  EXPECT_NEAR(entangler_concurrence(ansatz::EntanglerTemplate::ideal_zx(0.0)), 0.0, 1e-12);
  for (double phase : {0.3, 1.1, 2.0}) {
    EXPECT_NEAR(entangler_concurrence(ansatz::EntanglerTemplate::ideal_zx(phase)),
                std::abs(std::sin(phase)), 1e-12);
  }
}

TEST(Studies, ZeroPhaseReachesOnlyProductStates) {
  const auto& h = hydrogen();
  const double product = best_product_energy(h) - pauli::ground_energy(h);
  EXPECT_GT(product, 0.01);
  auto base = quick_config(2, 1);
  base.ansatz.entangler = ansatz::EntanglerTemplate::ideal_zx(kPi / 2);
  base.spsa.max_updates = 300;
  base.spsa.c = 0.05;
  const auto report = entangler_phase_study(h, base, {1}, {0.0, kPi / 2});
  ASSERT_EQ(report.points.size(), 2u);
  EXPECT_EQ(report.points[0].label, "phase=0,d=1");
  double best = 1e300;
  for (const auto& run : report.points[0].runs) {
    EXPECT_GE(run.error, product - 1e-9);
    best = std::min(best, run.error);
  }
  EXPECT_LT(best, product + 5e-3);
  EXPECT_LT(report.points[1].error_stats().min, product);
  EXPECT_EQ(report.extra["concurrence"].size(), 2u);
}

TEST(Studies, NoiseRaisesEnergies) {
  auto base = quick_config(2, 1);
  const auto report = noise_scaling_study(hydrogen(), base, {1}, {0.0, 0.05});
  ASSERT_EQ(report.points.size(), 2u);
  EXPECT_LT(report.points[0].mean_error(), report.points[1].mean_error());
  for (const auto& run : report.points[1].runs) EXPECT_GT(run.error, 0.0);
}

TEST(Studies, SamplingSurrogateScalesInjectedNoise) {
  auto base = quick_config(2, 1);
  base.n_runs = 1;
  base.spsa.max_updates = 20;
  base.spsa.averaging_window = 5;
  const SamplingSurrogate surrogate{10, 1000};
  const auto report = sampling_scaling_study(hydrogen(), base, {0, 250, 1000}, surrogate);
  ASSERT_EQ(report.points.size(), 3u);
  const double unlimited = report.points[0].extra["injected_noise"];
  const double quarter = report.points[1].extra["injected_noise"];
  const double reference = report.points[2].extra["injected_noise"];
  EXPECT_EQ(unlimited, 0.0);
  EXPECT_GT(reference, 0.0);
  EXPECT_NEAR(quarter, 2.0 * reference, 1e-12);
}

TEST(Studies, HeisenbergSweepTracksExactMagnetization) {
  HeisenbergConfig model;
  auto base = quick_config(4, 0);
  base.n_runs = 1;
  const auto report = heisenberg_sweep(model, {0.0, 2.0}, {0}, base);
  ASSERT_EQ(report.points.size(), 2u);
  EXPECT_EQ(report.points[0].label, "J=0,d=0");
  EXPECT_NEAR(report.points[0].reference, -4.0, 1e-12);
  EXPECT_NEAR(report.points[0].runs[0].energy, -4.0, 1e-3);
  EXPECT_NEAR(report.points[0].extra["exact_magnetization"].get<double>(), -1.0, 1e-12);
  EXPECT_NEAR(report.points[0].runs[0].magnetization, -1.0, 1e-3);
}

TEST(Studies, DepthSearchStopsAtFirstPassingDepth) {
  DepthSearchConfig config;
  config.pipeline = scaling_defaults(2, ansatz::Topology::experimental_2q());
  config.pipeline.n_runs = 2;
  config.function_budget = 600;
  config.max_depth = 1;
  config.threshold = 1.0;
  const auto result = critical_depth_search(hydrogen(), config);
  ASSERT_TRUE(result.critical_depth.has_value());
  EXPECT_EQ(*result.critical_depth, 0u);
  EXPECT_EQ(result.report.points.size(), 1u);

  config.threshold = 1e-12;
  const auto none = critical_depth_search(hydrogen(), config);
  EXPECT_FALSE(none.critical_depth.has_value());
  EXPECT_EQ(none.report.points.size(), 2u);
  EXPECT_TRUE(none.report.extra["critical_depth"].is_null());
}

TEST(Studies, DissociationSweepMapsEveryGeometry) {
  auto base = quick_config(2, 1);
  base.n_runs = 1;
  base.spsa.max_updates = 20;
  base.spsa.averaging_window = 5;
  const std::string dir = std::string(HEVQE_DATA_DIR) + "/h2_sweep/";
  std::vector<Geometry> geometries;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (geometries.size() == 2) break;
    geometries.push_back({static_cast<double>(geometries.size()), entry.path().string()});
  }
  ASSERT_EQ(geometries.size(), 2u);
  const auto report = dissociation_sweep(geometries, {}, base);
  ASSERT_EQ(report.points.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    const auto h = fermion::map_molecule(fermion::load_integrals_file(geometries[i].path), {});
    EXPECT_NEAR(report.points[i].reference, pauli::ground_energy(h.hamiltonian), 1e-12);
  }
}
