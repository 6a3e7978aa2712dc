// SPDX-License-Identifier: Apache-2.0
#include "iotrng_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "iotrng/bench/harness.hpp"
#include "iotrng/crypto/sha256.hpp"
#include "iotrng/entropy/puf_experiment.hpp"
#include "iotrng/entropy/source.hpp"
#include "iotrng/error.hpp"
#include "iotrng/registry.hpp"
#include "iotrng/stats/suite.hpp"

namespace iotrng::cli {

namespace {

struct SeedOptions {
  std::string seed = "entropy";
  bool allow_weak = false;
  unsigned strength = crypto::kMinSecurityStrength;
};

void add_seed_options(CLI::App* cmd, SeedOptions& o) {
  cmd->add_option("--seed", o.seed,
                  "Hex seed or 'entropy'. General-purpose generators read up to 16 hex digits as a big-endian "
                  "integer; crypto generators take the bytes verbatim")
      ->capture_default_str();
  cmd->add_flag("--allow-weak-seed", o.allow_weak,
                "Let a crypto generator start from a short literal seed by stretching it with SHA-256 (testing only)");
  cmd->add_option("--strength", o.strength, "Security strength in bits for crypto generators")->capture_default_str();
}

std::uint64_t parse_gp_seed(const std::string& text) {
  std::string_view hex = text;
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  if (hex.empty() || hex.size() > 16) {
    throw Error(Errc::InvalidArgument, "general-purpose seeds take 1 to 16 hex digits");
  }
  const Bytes b = from_hex(hex);
  std::uint64_t v = 0;
  for (std::uint8_t x : b) v = (v << 8) | x;
  return v;
}

bool weak_crypto_seed(std::string_view name, const SeedMaterial& seed, unsigned strength) {
  if (seed.claimed_entropy_bits() < strength) return true;
  return name == "ctr-drbg" && seed.bytes().size() < crypto::CtrDrbg::kSeedLen;
}

std::unique_ptr<Generator> open_generator(const std::string& name, const SeedOptions& o) {
  const GeneratorDescriptor& desc = find_descriptor(name);
  if (desc.klass != GeneratorClass::CryptoSecure) {
    std::uint64_t seed = 0;
    if (o.seed == "entropy") {
      auto src = entropy::host_entropy_source(8);
      const Bytes b = src->sample();
      for (std::uint8_t x : b) seed = (seed << 8) | x;
    } else {
      seed = parse_gp_seed(o.seed);
    }
    return make_generator(name, seed);
  }
  if (o.seed == "entropy") {
    auto src = entropy::host_entropy_source();
    entropy::EntropySource* sources[] = {src.get()};
    return make_generator(name, entropy::accumulate(sources, 256), o.strength);
  }
  SeedMaterial seed = SeedMaterial::full_entropy(from_hex(o.seed));
  if (o.allow_weak && weak_crypto_seed(name, seed, o.strength)) {
    const crypto::Digest d = crypto::Sha256::hash(seed.bytes());
    seed = SeedMaterial::full_entropy(Bytes(d.begin(), d.end()));
  }
  return make_generator(name, seed, o.strength);
}

void expand_ascii(ByteView bytes, std::string& text) {
  text.clear();
  text.reserve(bytes.size() * 8);
  for (std::uint8_t b : bytes) {
    for (int i = 7; i >= 0; --i) text.push_back(((b >> i) & 1) ? '1' : '0');
  }
}

// Streams `total` bytes (0 = until the reader goes away) in chunks.
void stream_out(Generator& g, std::uint64_t total, bool ascii, std::ostream& out) {
  constexpr std::size_t kChunk = 1 << 16;
  Bytes buf(kChunk);
  std::string text;
  std::uint64_t left = total;
  while (total == 0 || left > 0) {
    const std::size_t n = total == 0 ? kChunk : static_cast<std::size_t>(std::min<std::uint64_t>(left, kChunk));
    // Chunks are multiples of 4 bytes except possibly the last, so the word
    // stream is not broken between chunks.
    g.fill_bytes(std::span(buf.data(), n));
    if (ascii) {
      expand_ascii(ByteView(buf.data(), n), text);
      out.write(text.data(), static_cast<std::streamsize>(text.size()));
    } else {
      out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(n));
    }
    if (!out) return;
    left -= n;
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::InvalidArgument, "cannot open '" + path + "' for writing");
  f << text << '\n';
  if (!f) throw Error(Errc::InvalidArgument, "failed writing '" + path + "'");
}

std::string describe_tests() {
  std::string s;
  for (stats::NistTest t : stats::kAllNistTests) {
    if (!s.empty()) s += ", ";
    s += stats::nist_test_name(t);
  }
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Randomness toolkit: generators, NIST statistical suite, SRAM-PUF simulation, benchmarks"};
  app.name("iotrng");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  // generate
  std::string gen_name;
  SeedOptions gen_seed;
  std::uint64_t gen_bytes = 0;
  std::string gen_format = "raw-le-words";
  auto* generate = app.add_subcommand("generate", "Write a generator's output stream to stdout");
  generate->add_option("generator", gen_name, "Generator name")->required();
  add_seed_options(generate, gen_seed);
  generate->add_option("--bytes", gen_bytes, "Number of stream bytes")->required()->check(CLI::PositiveNumber);
  generate->add_option("--format", gen_format, "raw-le-words | ascii-bits (8 characters per stream byte)")
      ->check(CLI::IsMember({"raw-le-words", "ascii-bits"}))
      ->capture_default_str();

  // export
  std::string exp_name;
  SeedOptions exp_seed;
  std::uint64_t exp_bytes = 0;
  auto* exp = app.add_subcommand("export", "Raw little-endian word stream to stdout for external suites");
  exp->add_option("generator", exp_name, "Generator name")->required();
  add_seed_options(exp, exp_seed);
  exp->add_option("--bytes", exp_bytes, "Number of bytes; 0 streams until stdout is closed")->capture_default_str();

  // test
  std::string test_name;
  bool test_stdin = false;
  SeedOptions test_seed;
  stats::SuiteConfig suite;
  std::string test_report;
  bool test_p_values = false;
  std::vector<std::string> test_list;
  auto* test = app.add_subcommand("test", "Run the NIST statistical suite with second-order analysis");
  auto* test_gen_opt = test->add_option("generator", test_name, "Generator name");
  auto* test_stdin_opt = test->add_flag("--stdin", test_stdin, "Read the bit stream from stdin as raw bytes");
  test_gen_opt->excludes(test_stdin_opt);
  add_seed_options(test, test_seed);
  test->add_option("--sequences", suite.sequences, "Number of sequences")->capture_default_str()->check(CLI::PositiveNumber);
  test->add_option("--bits", suite.sequence_bits, "Bits per sequence")->capture_default_str()->check(CLI::PositiveNumber);
  test->add_option("--tests", test_list, "Subset of tests: " + describe_tests());
  test->add_option("--threads", suite.threads, "Worker threads, 0 = all cores")->capture_default_str();
  test->add_option("--report", test_report, "Write the JSON report to this path");
  test->add_flag("--p-values", test_p_values, "Include every p-value in the JSON report");

  // puf-sim
  entropy::PufExperimentConfig puf;
  std::string puf_report;
  auto* puf_sim = app.add_subcommand("puf-sim", "Simulate SRAM-PUF devices and report seeder metrics");
  puf_sim->add_option("--devices", puf.devices, "Number of devices")->capture_default_str()->check(CLI::PositiveNumber);
  puf_sim->add_option("--reads", puf.reads, "Power-up reads per device")->capture_default_str()->check(CLI::Range(2, 1 << 20));
  puf_sim->add_option("--size", puf.size_bytes, "SRAM bytes per device")->capture_default_str()->check(CLI::PositiveNumber);
  puf_sim->add_option("--seed-boots", puf.seed_boots, "Cold boots per device for seed statistics")
      ->capture_default_str()
      ->check(CLI::Range(8, 1 << 24));
  puf_sim->add_option("--sim-seed", puf.sim_seed, "Simulation seed")->capture_default_str();
  puf_sim->add_option("--modes", puf.params.modes, "Cell bias mixture modes")->capture_default_str();
  puf_sim->add_option("--weights", puf.params.weights, "Cell bias mixture weights")->capture_default_str();
  puf_sim->add_option("--sigma", puf.params.sigma_noise, "Cell bias spread around each mode")->capture_default_str();
  puf_sim->add_option("--report", puf_report, "Write the JSON report to this path");

  // bench
  std::vector<std::string> bench_names;
  SeedOptions bench_seed;
  std::string bench_mode = "throughput";
  double bench_duration = 10.0;
  std::size_t bench_iterations = 100000;
  std::string bench_report;
  auto* bench = app.add_subcommand("bench", "Measure throughput or per-call latency");
  bench->add_option("generators", bench_names, "Generator names, or 'all'")->required();
  add_seed_options(bench, bench_seed);
  bench->add_option("--mode", bench_mode, "throughput | latency")
      ->check(CLI::IsMember({"throughput", "latency"}))
      ->capture_default_str();
  bench->add_option("--duration", bench_duration, "Seconds per throughput run")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench->add_option("--iterations", bench_iterations, "Timed calls per latency run")
      ->capture_default_str()
      ->check(CLI::Range(static_cast<std::size_t>(bench::kMinLatencyIterations), std::size_t{1} << 32));
  bench->add_option("--report", bench_report, "Write the JSON results to this path");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "iotrng: " << e.what() << '\n';
    err << "run 'iotrng --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (generate->parsed()) {
      auto g = open_generator(gen_name, gen_seed);
      stream_out(*g, gen_bytes, gen_format == "ascii-bits", out);
      out.flush();
      return kExitOk;
    }
    if (exp->parsed()) {
      auto g = open_generator(exp_name, exp_seed);
      stream_out(*g, exp_bytes, false, out);
      out.flush();
      return kExitOk;
    }
    if (test->parsed()) {
      if (test_name.empty() && !test_stdin) throw Error(Errc::InvalidArgument, "test needs a generator name or --stdin");
      if (!test_list.empty()) {
        suite.tests.clear();
        for (const std::string& t : test_list) suite.tests.push_back(stats::parse_nist_test(t));
      }
      stats::validate(suite);
      stats::TestReport report;
      if (test_stdin) {
        const stats::ByteReader reader = [&in](std::span<std::uint8_t> buf) {
          in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
          if (static_cast<std::size_t>(in.gcount()) != buf.size()) {
            throw Error(Errc::SourceExhausted, "stdin ended before the requested number of bits");
          }
        };
        report = stats::run_suite(reader, suite, "stdin");
      } else {
        auto g = open_generator(test_name, test_seed);
        const stats::ByteReader reader = [&g](std::span<std::uint8_t> buf) { g->fill_bytes(buf); };
        report = stats::run_suite(reader, suite, test_name);
      }
      out << stats::report_to_table(report);
      if (!test_report.empty()) write_file(test_report, stats::report_to_json(report, test_p_values));
      return report.pass ? kExitOk : kExitSuiteFail;
    }
    if (puf_sim->parsed()) {
      const entropy::PufExperimentReport report = entropy::run_puf_experiment(puf);
      out << entropy::to_table(report);
      if (!puf_report.empty()) write_file(puf_report, entropy::to_json(report));
      return kExitOk;
    }
    if (bench->parsed()) {
      if (bench_names.size() == 1 && bench_names[0] == "all") {
        bench_names.clear();
        for (std::string_view n : generator_names()) bench_names.emplace_back(n);
      }
      std::vector<bench::BenchResult> results;
      for (const std::string& name : bench_names) {
        auto g = open_generator(name, bench_seed);
        if (bench_mode == "throughput") {
          results.push_back(bench::measure_throughput(*g, std::chrono::duration<double>(bench_duration)));
        } else {
          results.push_back(bench::measure_latency(*g, bench_iterations));
        }
      }
      out << bench::to_table(results);
      if (!bench_report.empty()) write_file(bench_report, bench::to_json(results));
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "iotrng: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "iotrng: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace iotrng::cli
