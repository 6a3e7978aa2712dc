// SPDX-License-Identifier: Apache-2.0
#ifdef IOTRNG_HAVE_CLI
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>
#include <sstream>

#include <json.hpp>

#include "iotrng/registry.hpp"
#include "iotrng_cli/cli.hpp"
#include "test_support.hpp"

namespace iotrng::cli {
namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string hex_of(const std::string& s) { return to_hex(ByteView(reinterpret_cast<const std::uint8_t*>(s.data()), s.size())); }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("iotrng_cli_test_" + std::to_string(::getpid()) + "_" + name);
}

TEST(Cli, GenerateXorshiftExample) {
  const CliRun r = run({"generate", "xorshift32", "--seed", "01", "--bytes", "8", "--format", "raw-le-words"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(hex_of(r.out), "2120040001060804");  // first word 270369
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, AsciiBitsFormat) {
  const CliRun r = run({"generate", "xorshift32", "--seed", "01", "--bytes", "2", "--format", "ascii-bits"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "0010000100100000");
  EXPECT_EQ(run({"generate", "xorshift32", "--bytes", "2", "--format", "hex"}).code, kExitUsage);
}

TEST(Cli, GenerateIsByteExactAndMatchesExport) {
  for (const std::string gen : {"mt19937", "sha256prng", "fortuna", "ctr-drbg"}) {
    const std::string seed = "000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f";
    const std::string gp_seed = "0123456789abcdef";
    const std::string& s = gen == "mt19937" ? gp_seed : seed;
    const CliRun a = run({"generate", gen, "--seed", s, "--bytes", "100003"});
    const CliRun b = run({"generate", gen, "--seed", s, "--bytes", "100003"});
    const CliRun e = run({"export", gen, "--seed", s, "--bytes", "100003"});
    ASSERT_EQ(a.code, kExitOk) << gen << a.err;
    EXPECT_EQ(a.out.size(), 100003u);
    EXPECT_EQ(a.out, b.out) << gen;
    EXPECT_EQ(a.out, e.out) << gen;
  }
}

TEST(Cli, GenerateMatchesLibraryStream) {
  const CliRun r = run({"generate", "tinymt32", "--seed", "2a", "--bytes", "4096"});
  ASSERT_EQ(r.code, kExitOk);
  auto g = make_generator("tinymt32", 0x2a);
  Bytes want(4096);
  g->fill_bytes(want);
  EXPECT_EQ(hex_of(r.out), to_hex(want));
}

TEST(Cli, WeakSeedGuard) {
  EXPECT_EQ(run({"generate", "sha256prng", "--seed", "00", "--bytes", "16"}).code, kExitUsage);
  EXPECT_EQ(run({"generate", "ctr-drbg", "--seed", std::string(40, 'a'), "--bytes", "16"}).code, kExitUsage);
  const CliRun ok = run({"generate", "sha256prng", "--seed", "00", "--bytes", "16", "--allow-weak-seed"});
  ASSERT_EQ(ok.code, kExitOk) << ok.err;
  EXPECT_EQ(ok.out.size(), 16u);
  EXPECT_EQ(run({"generate", "sha256prng", "--bytes", "16"}).code, kExitOk);  // host entropy
  EXPECT_EQ(run({"generate", "fortuna", "--seed", std::string(64, 'b'), "--strength", "256", "--bytes", "16"}).code,
            kExitUsage);
}

TEST(Cli, UnknownGeneratorListsNames) {
  const CliRun r = run({"generate", "rc4", "--bytes", "4"});
  EXPECT_EQ(r.code, kExitUsage);
  for (std::string_view n : generator_names()) EXPECT_NE(r.err.find(std::string(n)), std::string::npos) << n;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"generate", "xorshift32"}).code, kExitUsage);
  EXPECT_EQ(run({"generate", "xorshift32", "--bytes", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"generate", "xorshift32", "--bytes", "4", "--seed", "zz"}).code, kExitUsage);
  EXPECT_EQ(run({"generate", "xorshift32", "--bytes", "4", "--seed", std::string(17, '1')}).code, kExitUsage);
  EXPECT_EQ(run({"bench", "xorshift32", "--duration", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"bench", "xorshift32", "--mode", "latency", "--iterations", "10"}).code, kExitUsage);
  EXPECT_EQ(run({"test"}).code, kExitUsage);
  EXPECT_EQ(run({"test", "mt19937", "--bits", "1000"}).code, kExitUsage);
  EXPECT_EQ(run({"test", "mt19937", "--tests", "Poker"}).code, kExitUsage);
  const CliRun r = run({"puf-sim", "--reads", "1"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, HelpListsSubcommands) {
  const CliRun r = run({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  for (const char* sub : {"generate", "test", "puf-sim", "bench", "export"}) {
    EXPECT_NE(r.out.find(sub), std::string::npos) << sub;
  }
  const CliRun all = run({"--help-all"});
  EXPECT_EQ(all.code, kExitOk);
  for (const char* flag : {"--seed", "--allow-weak-seed", "--format", "--sequences", "--report", "--mode", "--devices"}) {
    EXPECT_NE(all.out.find(flag), std::string::npos) << flag;
  }
}

TEST(Cli, TestExitCodes) {
  const std::vector<std::string> quick = {"--sequences", "10", "--bits", "100000", "--tests", "Frequency", "Serial",
                                          "LongestRun", "--threads", "1"};
  auto with = [&quick](std::vector<std::string> head) {
    head.insert(head.end(), quick.begin(), quick.end());
    return head;
  };
  const CliRun bad = run(with({"test", "lfsr16", "--seed", "1"}));
  EXPECT_EQ(bad.code, kExitSuiteFail) << bad.err;
  const auto report = temp_file("suite.json");
  const CliRun good = run(with({"test", "hash-drbg", "--seed", std::string(64, 'c'), "--report", report.string()}));
  EXPECT_EQ(good.code, kExitOk) << good.out << good.err;
  std::ifstream f(report);
  const auto j = nlohmann::json::parse(f);
  EXPECT_EQ(j["generator"], "hash-drbg");
  EXPECT_EQ(j["tests"].size(), 3u);
  std::filesystem::remove(report);
}

TEST(Cli, TestFromStdin) {
  const CliRun gen = run({"generate", "xoroshiro128plus", "--seed", "5", "--bytes", "125000"});
  ASSERT_EQ(gen.code, kExitOk);
  const std::vector<std::string> args = {"test", "--stdin", "--sequences", "10", "--bits", "100000",
                                         "--tests", "Frequency", "BlockFrequency"};
  const CliRun ok = run(args, gen.out);
  EXPECT_EQ(ok.code, kExitOk) << ok.err;
  const CliRun short_input = run(args, gen.out.substr(0, 1000));
  EXPECT_EQ(short_input.code, kExitUsage);
  EXPECT_NE(short_input.err.find("stdin"), std::string::npos);
}

TEST(Cli, PufSimAndBench) {
  const auto report = temp_file("puf.json");
  const CliRun p = run({"puf-sim", "--devices", "2", "--reads", "5", "--size", "64", "--seed-boots", "10", "--report",
                     report.string()});
  ASSERT_EQ(p.code, kExitOk) << p.err;
  std::ifstream f(report);
  EXPECT_EQ(nlohmann::json::parse(f)["devices"].size(), 2u);
  std::filesystem::remove(report);

  const CliRun b = run({"bench", "xorshift32", "sha256prng", "--duration", "0.02"});
  ASSERT_EQ(b.code, kExitOk) << b.err;
  EXPECT_NE(b.out.find("sha256prng"), std::string::npos);
  const CliRun l = run({"bench", "minstd", "--mode", "latency", "--iterations", "2000"});
  EXPECT_EQ(l.code, kExitOk) << l.err;
}

}  // namespace
}  // namespace iotrng::cli
#endif
