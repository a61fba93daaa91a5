#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "relpack/figure.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
};

// Runs the CLI through the shell, capturing stdout and stderr together.
CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " RELPACK_CLI " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("relpack_cli_test_" + name);
}

}  // namespace

TEST(Cli, RadiusAtBoundExitsTwo) {
  const CliRun r = run("verify --n 2 --r 0.8165");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("radius at or above Biran–Cornea bound"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("verify --bogus").code, 2);
  EXPECT_EQ(run("verify --samples 0").code, 2);
  EXPECT_EQ(run("verify --r abc").code, 2);
  EXPECT_EQ(run("verify --epsilon 0.5").code, 2);
  EXPECT_EQ(run("figure --circles 0").code, 2);
  EXPECT_EQ(run("embed").code, 2);
  EXPECT_EQ(run("embed --point 0.1,0.1,0.1").code, 2);
  EXPECT_EQ(run("embed --point 0.7,0,0.5,0").code, 2);
  EXPECT_EQ(run("verify --samples 100", "RELPACK_THREADS=zero").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, VerifyWritesReport) {
  const auto path = temp_file("report.json");
  const CliRun r = run("verify --n 2 --r 0.8 --samples 3000 --seed 42 --out " + path.string(),
                    "RELPACK_THREADS=2");
  EXPECT_EQ(r.code, 0) << r.out;
  std::ifstream in(path);
  const nlohmann::json j = nlohmann::json::parse(in);
  EXPECT_EQ(j["params"]["n"], 2);
  EXPECT_EQ(j["params"]["r"], 0.8);
  EXPECT_EQ(j["params"]["seed"], 42);
  EXPECT_TRUE(j["overall"].get<bool>());
  EXPECT_EQ(j["checks"][0]["samples"], 3300);
  std::filesystem::remove(path);
}

TEST(Cli, ReportDoesNotDependOnThreadCount) {
  const CliRun one = run("verify --samples 2000 --seed 5", "RELPACK_THREADS=1");
  const CliRun many = run("verify --samples 2000 --seed 5", "RELPACK_THREADS=8");
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, many.out);
}

TEST(Cli, TighterToleranceFailsWithExitOne) {
  const CliRun r = run("verify --samples 1000 --tol-roundtrip 1e-30");
  EXPECT_EQ(r.code, 1) << r.out;
}

TEST(Cli, EmbedBasepoint) {
  const CliRun r = run("embed --r 0.8 --point 0,0,0,0");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("phi = (1.570796326794897, 0.333333333333333, "
                       "1.570796326794897, 0.333333333333333)"),
            std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("z = (-0.577350269189626, 0.000000000000000), "
                       "(-0.577350269189626, 0.000000000000000)"),
            std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("clifford_distance = 0.000000e+00"), std::string::npos) << r.out;
}

TEST(Cli, EmbedCliffordDistance) {
  auto distance = [](const std::string& out) {
    const auto at = out.find("clifford_distance = ");
    return std::stod(out.substr(at + 20));
  };
  const CliRun real = run("embed --point 0.3,0,0.2,0");
  EXPECT_EQ(real.code, 0);
  EXPECT_LT(distance(real.out), 1e-12);
  const CliRun off = run("embed --point 0.3,0.1,0.2,0");
  EXPECT_EQ(off.code, 0);
  EXPECT_GT(distance(off.out), 0.0);
}

TEST(Cli, FigureCsv) {
  const auto path = temp_file("figure.csv");
  const CliRun r = run("figure --r 0.8 --circles 3 --points-per-curve 64 --out " + path.string());
  EXPECT_EQ(r.code, 0) << r.out;
  std::ifstream in(path);
  const auto rows = relpack::read_csv(in);
  EXPECT_EQ(rows.size(), 4u * 65u);
  std::filesystem::remove(path);
}
