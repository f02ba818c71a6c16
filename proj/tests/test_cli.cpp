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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "hevqe/cli/commands.hpp"
#include "hevqe/pauli/dense.hpp"

using namespace hevqe;
using namespace hevqe::cli;
namespace fs = std::filesystem;

namespace {

const std::string kCli = HEVQE_CLI_PATH;
const std::string kData = HEVQE_DATA_DIR;

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int run_cli(const std::string& args, const fs::path& log) {
  const std::string command = kCli + " " + args + " > " + log.string() + " 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hevqe_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    const fs::path path = dir_ / name;
    std::ofstream(path) << text;
    return path;
  }

  fs::path small_optimize_config(const std::string& scenario = "optimize") {
    return write(scenario + ".json", R"({
      // two short noiseless runs on hydrogen
      "scenario": ")" + scenario + R"(",
      "seed": 11,
      "runs": 2,
      "problem": {"integrals": ")" + kData + R"(/h2_sto3g_0.735.fcidump"},
      "ansatz": {"depth": 1, "entangler": {"kind": "ideal_zx", "phase": 1.0}},
      "sampling": {"mode": "noisy_sampled", "shots": 200, "final_shots": 1000},
      "noise": {"kind": "thermal", "t1": 40e-6, "t2_star": 30e-6},
      "spsa": {"max_updates": 15, "averaging_window": 5, "calibration_samples": 5}
    })");
  }

  fs::path dir_;
};

}  // namespace

TEST(RunConfig, RejectsUnknownKeysAndBadValues) {
  const auto base = nlohmann::json::parse(R"({"scenario": "optimize",
      "problem": {"hamiltonian": "h.txt"}})");
  EXPECT_NO_THROW(parse_run_config(base));
  auto unknown = base;
  unknown["spsa"] = {{"learning_rate", 0.1}};
  EXPECT_THROW(parse_run_config(unknown), ConfigError);
  auto top = base;
  top["colour"] = "blue";
  EXPECT_THROW(parse_run_config(top), ConfigError);
  auto wrong_type = base;
  wrong_type["runs"] = "ten";
  EXPECT_THROW(parse_run_config(wrong_type), ConfigError);
  auto bad_scenario = base;
  bad_scenario["scenario"] = "teleport";
  EXPECT_THROW(parse_run_config(bad_scenario), ConfigError);
  auto two_sources = base;
  two_sources["problem"]["integrals"] = "x.fcidump";
  EXPECT_THROW(parse_run_config(two_sources), ConfigError);
  auto readout = base;
  readout["sampling"] = {{"readout_error", 0.1}, {"readout", {{0.5, 0.4}}}};
  EXPECT_THROW(parse_run_config(readout), ConfigError);
}

TEST(RunConfig, CanonicalFormAndHash) {
  const auto j = nlohmann::json::parse(R"({"scenario": "optimize", "seed": 3,
      "problem": {"heisenberg": {"n_qubits": 4}}})");
  const RunConfig config = parse_run_config(j);
  const auto canonical = to_json(config);
  EXPECT_EQ(to_json(parse_run_config(canonical)).dump(), canonical.dump());
  RunConfig moved = config;
  moved.output_dir = "elsewhere";
  moved.threads = 7;
  EXPECT_EQ(config_hash(moved), config_hash(config));
  RunConfig reseeded = config;
  reseeded.seed = 4;
  EXPECT_NE(config_hash(reseeded), config_hash(config));
  EXPECT_EQ(config_hash(config).size(), 16u);
}

TEST(RunConfig, SmokeTierCapsEffort) {
  RunConfig config;
  config.runs = 50;
  config.spsa.max_updates = 1000;
  config.study.max_depth = 8;
  config.tier = Tier::smoke;
  const auto smoke = apply_tier(config);
  EXPECT_LE(smoke.runs, 3u);
  EXPECT_LE(smoke.spsa.max_updates, 60u);
  EXPECT_LE(smoke.study.max_depth, 3u);
  config.tier = Tier::paper;
  EXPECT_EQ(apply_tier(config).runs, 50u);
}

TEST(RunConfig, ShippedConfigsParse) {
  for (const auto& entry : fs::directory_iterator(HEVQE_CONFIG_DIR)) {
    EXPECT_NO_THROW(load_run_config(entry.path().string())) << entry.path();
  }
}

TEST_F(CliTest, OptimizeIsReproducibleByteForByte) {
  const auto config = small_optimize_config();
  const auto first = dir_ / "first", second = dir_ / "second";
  ASSERT_EQ(run_cli("optimize --config " + config.string() + " --out " + first.string(),
                    dir_ / "log1"),
            kExitOk)
      << slurp(dir_ / "log1");
  ASSERT_EQ(run_cli("optimize --config " + config.string() + " --out " + second.string() +
                        " --threads 2",
                    dir_ / "log2"),
            kExitOk);
  for (const std::string name : {"report.json", "report.csv", "traces/run_000.json",
                                 "traces/run_001.json"}) {
    ASSERT_TRUE(fs::exists(first / name)) << name;
    EXPECT_EQ(slurp(first / name), slurp(second / name)) << name;
  }
  const auto report = nlohmann::json::parse(slurp(first / "report.json"));
  EXPECT_EQ(report["provenance"]["seed"], 11);
  EXPECT_EQ(slurp(first / "report.csv").rfind("# config_hash=", 0), 0u);
  const auto trace = nlohmann::json::parse(slurp(first / "traces/run_000.json"));
  EXPECT_TRUE(trace.contains("provenance"));
  EXPECT_NE(slurp(dir_ / "log1").find("chemical accuracy"), std::string::npos);

  const auto third = dir_ / "third";
  ASSERT_EQ(run_cli("optimize --config " + config.string() + " --out " + third.string() +
                        " --seed 12",
                    dir_ / "log3"),
            kExitOk);
  EXPECT_NE(slurp(first / "traces/run_000.json"), slurp(third / "traces/run_000.json"));
}

TEST_F(CliTest, UsageErrorsExitWithTwo) {
  EXPECT_EQ(run_cli("optimize --config " + (dir_ / "missing.json").string(), dir_ / "log"),
            kExitUsage);
  const auto bad = write("bad.json", R"({"scenario": "optimize", "problem": {"hamiltonian": "h.txt"},
                                        "spsa": {"stepsize": 1}})");
  EXPECT_EQ(run_cli("optimize --config " + bad.string(), dir_ / "log"), kExitUsage);
  EXPECT_NE(slurp(dir_ / "log").find("stepsize"), std::string::npos);
  EXPECT_EQ(run_cli("optimize", dir_ / "log"), kExitUsage);
  EXPECT_EQ(run_cli("frobnicate", dir_ / "log"), kExitUsage);
  const auto sweep = small_optimize_config("sweep");
  EXPECT_EQ(run_cli("optimize --config " + sweep.string(), dir_ / "log"), kExitUsage);
  EXPECT_EQ(run_cli("map " + (dir_ / "nothing.fcidump").string(), dir_ / "log"), kExitUsage);
  EXPECT_EQ(run_cli("map " + kData + "/h2_sto3g_0.735.fcidump --scheme bravyi", dir_ / "log"),
            kExitUsage);
}

TEST_F(CliTest, MapAndGroupRoundTrip) {
  const auto hamiltonian = dir_ / "h2.txt";
  ASSERT_EQ(run_cli("map " + kData + "/h2_sto3g_0.735.fcidump --out " + hamiltonian.string(),
                    dir_ / "log"),
            kExitOk);
  const auto h = pauli::QubitHamiltonian::load(hamiltonian.string());
  EXPECT_EQ(h.num_qubits(), 2u);
  EXPECT_EQ(h.size(), 4u);
  EXPECT_NEAR(pauli::ground_energy(h), -1.137306, 1e-5);
  EXPECT_NE(slurp(hamiltonian).find("# scheme"), std::string::npos);

  const auto grouping = dir_ / "groups.json";
  ASSERT_EQ(run_cli("group " + hamiltonian.string() + " --shots 1000 --out " + grouping.string(),
                    dir_ / "log"),
            kExitOk);
  const auto j = nlohmann::json::parse(slurp(grouping));
  EXPECT_EQ(j["sets"].size(), 2u);
  EXPECT_EQ(j["num_sets"], 2);
  EXPECT_EQ(j["sets"][1]["basis"], "XX");
  EXPECT_GT(j["error_bound"]["grouped"].get<double>(), 0.0);
}

TEST_F(CliTest, ReportAggregatesAndRejectsMixedScenarios) {
  const auto config = small_optimize_config();
  ASSERT_EQ(run_cli("optimize --config " + config.string() + " --out " + (dir_ / "a").string(),
                    dir_ / "log"),
            kExitOk);
  ASSERT_EQ(run_cli("optimize --config " + config.string() + " --seed 5 --out " +
                        (dir_ / "b").string(),
                    dir_ / "log"),
            kExitOk);
  const auto merged = dir_ / "merged";
  ASSERT_EQ(run_cli("report " + (dir_ / "a/report.json").string() + " " +
                        (dir_ / "b/report.json").string() + " --out " + merged.string(),
                    dir_ / "log"),
            kExitOk)
      << slurp(dir_ / "log");
  const std::string csv = slurp(merged / "report.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
  EXPECT_TRUE(fs::exists(merged / "summary.json"));

  ASSERT_EQ(run_cli("report " + (dir_ / "a/traces/run_000.json").string() + " " +
                        (dir_ / "a/traces/run_001.json").string(),
                    dir_ / "traces.csv"),
            kExitOk);
  const std::string traces = slurp(dir_ / "traces.csv");
  EXPECT_EQ(traces.rfind("scenario,source,run,E_f,E_f_std,S_f,function_calls,best_energy", 0), 0u);

  const auto heisenberg = write("heis.json", R"({"scenario": "heisenberg", "runs": 1,
      "problem": {"heisenberg": {"n_qubits": 2, "edges": [[0, 1]]}},
      "ansatz": {"depth": 0, "topology": "experimental"},
      "study": {"couplings": [1.0], "depths": [0]},
      "spsa": {"max_updates": 10, "averaging_window": 5, "calibration_samples": 3}})");
  ASSERT_EQ(run_cli("sweep --config " + heisenberg.string() + " --out " + (dir_ / "h").string(),
                    dir_ / "log"),
            kExitOk)
      << slurp(dir_ / "log");
  EXPECT_EQ(run_cli("report " + (dir_ / "a/report.json").string() + " " +
                        (dir_ / "h/report.json").string(),
                    dir_ / "log"),
            kExitUsage);
}

TEST_F(CliTest, RuntimeFailureExitsWithOneAndKeepsPartialTraces) {
  const auto hamiltonian = write("wide.txt", "0.5\tZIIIIIIIIII\n");
  const auto config = write("wide.json", R"({"scenario": "optimize", "runs": 1,
      "problem": {"hamiltonian": ")" + hamiltonian.string() + R"("},
      "ansatz": {"depth": 0, "topology": "all_to_all"}})");
  const auto out = dir_ / "out";
  EXPECT_EQ(run_cli("optimize --config " + config.string() + " --out " + out.string(),
                    dir_ / "log"),
            kExitFailure);
  EXPECT_TRUE(fs::exists(out / "partial_traces.json"));
}

TEST_F(CliTest, EnvironmentSetsOutputDirectory) {
  const auto config = small_optimize_config();
  const auto target = dir_ / "from_env";
  const std::string command = "HEVQE_OUTPUT_DIR=" + target.string() + " " + kCli +
                              " optimize --config " + config.string() + " > /dev/null 2>&1";
  ASSERT_EQ(std::system(command.c_str()), 0);
  EXPECT_TRUE(fs::exists(target / "report.json"));
}

TEST(Commands, InProcessMapWritesToStream) {
  MapOptions options;
  options.integrals = kData + "/lih_sto3g_1.600.fcidump";
  options.frozen_orbitals = 1;
  std::ostringstream out, err;
  ASSERT_EQ(cmd_map(options, out, err), kExitOk) << err.str();
  const auto h = pauli::QubitHamiltonian::from_text(out.str());
  EXPECT_EQ(h.num_qubits(), 4u);
  EXPECT_EQ(h.size(), 99u);
}
