// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace qpi::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qpi_cli_test_" + name);
}

TEST(Cli, GammaLemmaCount) {
  const auto r = run({"gamma", "--n", "12", "--t", "4", "--h", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("lemma_count 67\n"), std::string::npos) << r.out;
}

TEST(Cli, GammaEnumerateReportsDiscrepancy) {
  const auto r = run({"gamma", "--n", "12", "--t", "4", "--h", "1", "--enumerate"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("lemma_count 12\n"), std::string::npos);
  EXPECT_NE(r.out.find("at_most_h_count 13\n"), std::string::npos);
  EXPECT_NE(r.out.find("enumeration_agrees yes"), std::string::npos);
  EXPECT_EQ(run({"gamma", "--n", "24", "--t", "4", "--h", "1", "--enumerate"}).code, kExitUsage);
}

TEST(Cli, BoundsMutualInformation) {
  const auto r = run({"bounds", "--n", "8", "--t", "2", "--h", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("mi_achieved 3.000 bits"), std::string::npos) << r.out;
  const auto j = run({"bounds", "--n", "12", "--t", "4", "--h", "2", "--json"});
  EXPECT_NE(j.out.find("\"gamma_count\": \"67\""), std::string::npos) << j.out;
  const auto table = run({"bounds", "--n", "64", "--t", "8", "--h", "1", "--table"});
  EXPECT_NE(table.out.find("\n4096,64,1,"), std::string::npos) << table.out;
}

TEST(Cli, VerifyPasses) {
  const auto r = run({"verify"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"gamma", "--n", "12"}).code, kExitUsage);
  EXPECT_EQ(run({"run", "--n", "10", "--t", "4"}).code, kExitUsage);
  EXPECT_EQ(run({"run", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run({"run", "--n", "abc"}).code, kExitUsage);
  const auto bad = run({"run", "--n", "12", "--t", "4", "--h", "7"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("h=7"), std::string::npos) << bad.err;
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("gamma"), std::string::npos);
}

TEST(Cli, RunFilesAreByteIdentical) {
  const auto a = scratch("a.csv"), b = scratch("b.csv");
  const std::vector<std::string> base{"run", "--n", "32", "--t", "4", "--h", "3", "--trials", "200", "--seed", "5"};
  auto args_a = base, args_b = base;
  args_a.insert(args_a.end(), {"--out", a.string()});
  args_b.insert(args_b.end(), {"--out", b.string(), "--threads", "3"});
  ASSERT_EQ(run(args_a).code, kExitOk);
  ASSERT_EQ(run(args_b).code, kExitOk);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(a).empty());
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(Cli, ConfigFileWithFlagOverride) {
  const auto cfg = scratch("cfg.json");
  {
    std::ofstream out(cfg);
    out << R"({"n": 16, "t": 4, "h": 2, "trials": 3, "seed": 1, "format": "json"})";
  }
  const auto from_file = run({"run", "--config", cfg.string()});
  ASSERT_EQ(from_file.code, kExitOk) << from_file.err;
  EXPECT_NE(from_file.out.find("\"seed\": 1,"), std::string::npos);
  const auto overridden = run({"run", "--config", cfg.string(), "--seed", "9", "--format", "csv"});
  ASSERT_EQ(overridden.code, kExitOk);
  EXPECT_EQ(overridden.out.rfind("kind,trial,seed", 0), 0u);
  EXPECT_NE(overridden.out.find("trial,0,9,"), std::string::npos);
  std::filesystem::remove(cfg);
}

TEST(Cli, HadamardFileOption) {
  const auto path = scratch("l2.txt");
  {
    std::ofstream out(path);
    out << "1 -1\n1 1\n";
  }
  EXPECT_EQ(run({"run", "--n", "8", "--t", "2", "--h", "1", "--trials", "20", "--hadamard", path.string()}).code,
            kExitOk);
  {
    std::ofstream out(path);
    out << "1 1\n1 1\n";
  }
  EXPECT_EQ(run({"run", "--n", "8", "--t", "2", "--h", "1", "--hadamard", path.string()}).code, kExitUsage);
  std::filesystem::remove(path);
}

TEST(Golden, SessionTranscript) {
  const auto json = run({"session", "--n", "8", "--t", "2", "--h", "1", "--seed", "3"});
  ASSERT_EQ(json.code, kExitOk);
  EXPECT_EQ(json.out, slurp(std::string(QPI_GOLDEN_DIR) + "/session_n8_t2_h1_seed3.json"));
  const auto hex = run({"session", "--n", "8", "--t", "2", "--h", "1", "--seed", "3", "--hex"});
  EXPECT_EQ(hex.out, slurp(std::string(QPI_GOLDEN_DIR) + "/session_n8_t2_h1_seed3.hex"));
  EXPECT_EQ(hex.out, run({"session", "--n", "8", "--t", "2", "--h", "1", "--seed", "3", "--hex"}).out);
}

}  // namespace
}  // namespace qpi::cli
