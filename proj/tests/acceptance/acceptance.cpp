// SPDX-License-Identifier: Apache-2.0
//
// Acceptance run: one PASS/FAIL line per criterion on stdout, details on
// stderr. Exit status 0 iff every selected criterion passed.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <unistd.h>

#include "corpus.hpp"
#include "data_files.hpp"
#include "iotrng/bench/harness.hpp"
#include "iotrng/crypto/csprng.hpp"
#include "iotrng/crypto/drbg.hpp"
#include "iotrng/crypto/sha256.hpp"
#include "iotrng/entropy/puf_experiment.hpp"
#include "iotrng/entropy/source.hpp"
#include "iotrng/registry.hpp"
#include "iotrng/stats/bit_sequence.hpp"
#include "iotrng/stats/ks.hpp"
#include "iotrng/stats/nist.hpp"
#include "iotrng/stats/suite.hpp"

namespace {

using namespace iotrng;
using Clock = std::chrono::steady_clock;

// Pinned tolerances and run sizes.
constexpr double kCriterion1MaxSeconds = 1.0;
constexpr std::size_t kMinVectorsPerMechanism = 4;
constexpr std::size_t kSuiteSequences = 100;
constexpr std::size_t kSuiteBits = 1'000'000;
constexpr std::size_t kLfsrMinFailingTests = 8;
constexpr double kOracleTolerance = 1e-6;
constexpr double kPufMaxSeconds = 30.0;
constexpr double kMinEntropyLo = 0.03, kMinEntropyHi = 0.07;
constexpr double kWeightLo = 0.47, kWeightHi = 0.53;
constexpr double kInterLo = 0.48, kInterHi = 0.52;
constexpr double kSeedBitsLo = 28.0, kSeedBitsHi = 34.0;
constexpr double kSeedKsMinP = 0.05;
constexpr int kBenchRuns = 10;
constexpr int kBenchMinHolding = 9;
constexpr double kBenchSeconds = 0.25;
constexpr std::size_t kLatencyIterations = 200'000;
constexpr double kLightweightGap = 5.0;
constexpr double kMtMaxOverMean = 10.0;
constexpr double kShaMaxOverMean = 3.0;
constexpr double kMetaKsMinP = 1e-4;
constexpr std::size_t kMetaKsMinValues = 1000;
constexpr unsigned kMinStrength = 128;

struct Outcome {
  bool pass = false;
  std::string summary;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

SeedMaterial labelled_seed(const std::string& label) {
  const auto d = crypto::Sha256::hash(Bytes(label.begin(), label.end()));
  return SeedMaterial::full_entropy(Bytes(d.begin(), d.end()));
}

std::uint64_t labelled_u64(const std::string& label) {
  const auto d = crypto::Sha256::hash(Bytes(label.begin(), label.end()));
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | d[i];
  return v;
}

std::unique_ptr<Generator> seeded(const std::string& name, const std::string& label) {
  if (find_descriptor(name).klass == GeneratorClass::CryptoSecure) return make_generator(name, labelled_seed(label));
  return make_generator(name, labelled_u64(label));
}

stats::TestReport suite_of(Generator& g, const std::string& name, std::vector<stats::NistTest> tests = {}) {
  stats::SuiteConfig cfg;
  cfg.sequences = kSuiteSequences;
  cfg.sequence_bits = kSuiteBits;
  if (!tests.empty()) cfg.tests = std::move(tests);
  return stats::run_suite([&g](std::span<std::uint8_t> out) { g.fill_bytes(out); }, cfg, name);
}

// 1. CAVP-layout known answers for both DRBGs.
Outcome criterion1() {
  const auto t0 = Clock::now();
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // section -> (ok, total)
  std::map<std::string, std::size_t> reseeds;
  const auto provider = crypto::builtin_provider();
  for (const auto& v : testing::read_drbg_vectors("drbg_vectors.rsp")) {
    Bytes out(v.returned.size());
    if (v.section == "SHA-256") {
      crypto::HashDrbg d(provider, v.entropy, v.nonce, v.personalization);
      if (v.reseed) d.reseed(v.entropy_reseed, v.additional_reseed);
      d.generate(out, v.additional1);
      d.generate(out, v.additional2);
    } else {
      crypto::CtrDrbg d(provider, v.entropy, v.personalization);
      if (v.reseed) d.reseed(v.entropy_reseed, v.additional_reseed);
      d.generate(out, v.additional1);
      d.generate(out, v.additional2);
    }
    auto& t = tally[v.section];
    t.second++;
    if (out == v.returned) t.first++;
    if (v.reseed) reseeds[v.section]++;
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  bool pass = secs < kCriterion1MaxSeconds && tally.size() == 2;
  std::string s;
  for (const auto& [section, t] : tally) {
    pass = pass && t.first == t.second && t.second >= kMinVectorsPerMechanism && reseeds[section] >= 1;
    s += section + " " + std::to_string(t.first) + "/" + std::to_string(t.second) + " (" +
         std::to_string(reseeds[section]) + " reseed), ";
  }
  return {pass, s + fmt("%.3f s", secs)};
}

// 2. Every general-purpose and crypto generator passes all 15 tests.
Outcome criterion2() {
  const std::vector<std::string> names = {"knuth-lcg",  "mt19937",   "tinymt32", "minstd",   "xorshift64star",
                                          "xoroshiro128plus", "sha256prng", "hash-drbg", "ctr-drbg", "fortuna"};
  bool pass = true;
  std::string s;
  for (const auto& name : names) {
    const auto t0 = Clock::now();
    auto g = seeded(name, "acceptance suite " + name);
    const stats::TestReport r = suite_of(*g, name);
    std::vector<stats::NistTest> failed;
    for (const auto& t : r.tests) {
      if (t.verdict != stats::Verdict::Pass) failed.push_back(t.test);
    }
    std::string note = "15/15";
    bool ok = failed.empty();
    if (failed.size() == 1) {
      // One re-run with a different seed on a single weak test.
      auto g2 = seeded(name, "acceptance suite rerun " + name);
      const stats::TestReport rr = suite_of(*g2, name, {failed[0]});
      ok = rr.tests[0].verdict == stats::Verdict::Pass;
      note = "14/15, " + std::string(stats::nist_test_name(failed[0])) + (ok ? " passed on re-run" : " failed re-run");
    } else if (!failed.empty()) {
      note = std::to_string(15 - failed.size()) + "/15, failing:";
      for (auto t : failed) note += " " + std::string(stats::nist_test_name(t));
    }
    std::cerr << "  [2] " << name << ": " << note << fmt(" (%.1f s)", std::chrono::duration<double>(Clock::now() - t0).count())
              << '\n';
    if (!ok) s += name + " (" + note + ") ";
    pass = pass && ok;
  }
  return {pass, pass ? "10 generators pass all 15 tests at 100 x 10^6 bits" : "not passing: " + s};
}

// 3. Known-bad generators fail where expected.
Outcome criterion3() {
  auto x = make_generator("xorshift32", labelled_u64("acceptance xorshift32"));
  const stats::TestReport rank = suite_of(*x, "xorshift32", {stats::NistTest::Rank});
  const auto& pv = rank.tests[0].statistics[0].p_values;
  const auto below = static_cast<std::size_t>(std::count_if(pv.begin(), pv.end(), [](double p) { return p < 0.01; }));
  const bool a = pv.size() == kSuiteSequences && below == kSuiteSequences;

  auto l = make_generator("lfsr16", labelled_u64("acceptance lfsr16"));
  const stats::TestReport lr = suite_of(*l, "lfsr16");
  const std::size_t lfsr_fail = lr.count(stats::Verdict::Fail);
  const bool b = lfsr_fail >= kLfsrMinFailingTests;
  return {a && b, "xorshift32 Rank " + std::to_string(below) + "/" + std::to_string(pv.size()) +
                      " sequences below 0.01; lfsr16 fails " + std::to_string(lfsr_fail) + "/15 tests"};
}

// 4. p-values agree with the reference implementation on the shared corpus.
Outcome criterion4() {
  const auto ref = testing::read_corpus_reference("nist_corpus_pvalues.txt");
  std::size_t compared = 0, mismatched = 0, na_ok = 0, na_bad = 0;
  double worst = 0.0;
  std::string first_bad;
  for (std::size_t s = 0; s < testing::kCorpusSequences; ++s) {
    const auto bits = stats::BitSequence::from_bytes(testing::corpus_sequence(s)).unpack();
    for (stats::NistTest t : stats::kAllNistTests) {
      const auto& want = ref.at({s, t});
      std::vector<double> got;
      bool na = false;
      try {
        got = stats::run_nist_test(t, bits);
      } catch (const Error& e) {
        if (e.code() != Errc::NotApplicable) throw;
        na = true;
      }
      if (!want || na) {
        (!want && na) ? ++na_ok : ++na_bad;
        continue;
      }
      if (got.size() != want->size()) {
        ++mismatched;
        continue;
      }
      for (std::size_t i = 0; i < got.size(); ++i) {
        const double diff = std::abs(got[i] - (*want)[i]);
        worst = std::max(worst, diff);
        ++compared;
        if (diff > kOracleTolerance) {
          if (first_bad.empty()) first_bad = std::to_string(s) + " " + std::string(stats::nist_test_name(t));
          ++mismatched;
        }
      }
    }
  }
  const bool pass = mismatched == 0 && na_bad == 0 && compared > 0;
  return {pass, std::to_string(compared) + " p-values, max |diff| " + fmt("%.2e", worst) + ", " +
                    std::to_string(na_ok) + " not-applicable agree, " + std::to_string(mismatched + na_bad) +
                    " mismatches" + (first_bad.empty() ? "" : " (first: " + first_bad + ")")};
}

// 5. PUF simulation lands in the calibrated ranges.
Outcome criterion5() {
  const auto t0 = Clock::now();
  entropy::PufExperimentConfig cfg;  // 5 devices x 50 reads x 1 kB
  const auto r = entropy::run_puf_experiment(cfg);
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  double me_lo = 1, me_hi = 0, w_lo = 1, w_hi = 0, ks_lo = 1;
  for (const auto& d : r.devices) {
    me_lo = std::min(me_lo, d.min_entropy_relative);
    me_hi = std::max(me_hi, d.min_entropy_relative);
    w_lo = std::min(w_lo, d.weight);
    w_hi = std::max(w_hi, d.weight);
    ks_lo = std::min(ks_lo, d.seed_ks_p);
  }
  const auto& last = r.seed_entropy.back();
  const bool pass = r.devices.size() == 5 && me_lo >= kMinEntropyLo && me_hi <= kMinEntropyHi && w_lo >= kWeightLo &&
                    w_hi <= kWeightHi && r.inter_distance_min >= kInterLo && r.inter_distance_max <= kInterHi &&
                    last.length_bytes == 1024 && last.min_bits >= kSeedBitsLo && last.max_bits <= kSeedBitsHi &&
                    ks_lo > kSeedKsMinP && secs < kPufMaxSeconds;
  std::ostringstream s;
  s << "min-entropy " << fmt("%.2f", 100 * me_lo) << "-" << fmt("%.2f", 100 * me_hi) << "%, weight "
    << fmt("%.2f", 100 * w_lo) << "-" << fmt("%.2f", 100 * w_hi) << "%, inter-device "
    << fmt("%.2f", 100 * r.inter_distance_min) << "-" << fmt("%.2f", 100 * r.inter_distance_max)
    << "%, seed bits at 1 kB " << fmt("%.1f", last.min_bits) << "-" << fmt("%.1f", last.max_bits) << ", min KS p "
    << fmt("%.3f", ks_lo) << ", " << fmt("%.1f s", secs);
  return {pass, s.str()};
}

// 6. Throughput orderings and latency spike ratios over repeated runs.
Outcome criterion6() {
  std::vector<std::string> lightweight;
  for (std::string_view n : generator_names()) {
    if (find_descriptor(n).klass == GeneratorClass::GeneralPurpose) lightweight.emplace_back(n);
  }
  const std::vector<std::string> crypto = {"sha256prng", "ctr-drbg", "fortuna"};
  int gp_order = 0, crypto_order = 0, gap = 0, mt_ratio = 0, sha_ratio = 0;
  double xs_cv = 0.0;
  for (int run = 0; run < kBenchRuns; ++run) {
    std::map<std::string, double> rate;
    for (const auto& names : {lightweight, crypto}) {
      for (const auto& n : names) {
        auto g = seeded(n, "acceptance bench " + n);
        rate[n] = bench::measure_throughput(*g, std::chrono::duration<double>(kBenchSeconds)).rate_kbps;
      }
    }
    double min_light = 1e300;
    for (const auto& n : lightweight) min_light = std::min(min_light, rate[n]);
    const bool o1 = rate["xorshift32"] > rate["knuth-lcg"] && rate["knuth-lcg"] > rate["tinymt32"];
    const bool o2 = rate["sha256prng"] > rate["ctr-drbg"] && rate["ctr-drbg"] > rate["fortuna"];
    const bool o3 = min_light / rate["sha256prng"] >= kLightweightGap;

    auto mt = seeded("mt19937", "acceptance latency mt19937");
    auto sha = seeded("sha256prng", "acceptance latency sha256prng");
    auto xs = seeded("xorshift32", "acceptance latency xorshift32");
    const auto lm = bench::measure_latency(*mt, kLatencyIterations);
    const auto ls = bench::measure_latency(*sha, kLatencyIterations);
    const auto lx = bench::measure_latency(*xs, kLatencyIterations);
    const bool o4 = lm.max_us / lm.mean_us > kMtMaxOverMean;
    const bool o5 = ls.max_us / ls.mean_us > kShaMaxOverMean;
    xs_cv = std::max(xs_cv, lx.stddev_us / lx.mean_us);
    gp_order += o1;
    crypto_order += o2;
    gap += o3;
    mt_ratio += o4;
    sha_ratio += o5;
    std::cerr << "  [6] run " << run + 1 << ": xorshift32 " << fmt("%.0f", rate["xorshift32"]) << ", knuth-lcg "
              << fmt("%.0f", rate["knuth-lcg"]) << ", tinymt32 " << fmt("%.0f", rate["tinymt32"]) << ", sha256prng "
              << fmt("%.0f", rate["sha256prng"]) << ", ctr-drbg " << fmt("%.0f", rate["ctr-drbg"]) << ", fortuna "
              << fmt("%.0f", rate["fortuna"]) << " kB/s; min lightweight/sha256prng "
              << fmt("%.1f", min_light / rate["sha256prng"]) << "; max/mean mt19937 " << fmt("%.0f", lm.max_us / lm.mean_us)
              << ", sha256prng " << fmt("%.0f", ls.max_us / ls.mean_us) << (lm.coarse_clock ? " (coarse clock)" : "")
              << '\n';
  }
  const bool pass = gp_order >= kBenchMinHolding && crypto_order >= kBenchMinHolding && gap >= kBenchMinHolding &&
                    mt_ratio >= kBenchMinHolding && sha_ratio >= kBenchMinHolding;
  auto frac = [](int k) { return std::to_string(k) + "/" + std::to_string(kBenchRuns); };
  return {pass, "xorshift32>knuth-lcg>tinymt32 " + frac(gp_order) + ", sha256prng>ctr-drbg>fortuna " +
                    frac(crypto_order) + ", lightweight gap>=5 " + frac(gap) + ", mt19937 max/mean>10 " +
                    frac(mt_ratio) + ", sha256prng max/mean>3 " + frac(sha_ratio) + fmt("; xorshift32 sd/mean %.2f", xs_cv)};
}

// 7. Property checks across modules.
Outcome criterion7() {
  std::vector<std::string> bad;
  // p-values in [0, 1] and pooled uniformity under a crypto generator.
  auto g = seeded("hash-drbg", "acceptance pooled");
  stats::SuiteConfig cfg;
  cfg.sequences = 10;
  cfg.sequence_bits = kSuiteBits;
  const auto report = stats::run_suite([&g](std::span<std::uint8_t> out) { g->fill_bytes(out); }, cfg, "hash-drbg");
  std::vector<double> pooled;
  for (const auto& t : report.tests) {
    for (const auto& st : t.statistics) pooled.insert(pooled.end(), st.p_values.begin(), st.p_values.end());
  }
  for (const std::string name : {"lfsr16", "xorshift32", "minstd"}) {
    auto w = seeded(name, "acceptance range " + name);
    cfg.sequences = 3;
    const auto r = stats::run_suite([&w](std::span<std::uint8_t> out) { w->fill_bytes(out); }, cfg, name);
    for (const auto& t : r.tests) {
      for (const auto& st : t.statistics) {
        for (double p : st.p_values) {
          if (!(p >= 0.0 && p <= 1.0)) bad.push_back("p-value out of range in " + name);
        }
      }
    }
  }
  for (double p : pooled) {
    if (!(p >= 0.0 && p <= 1.0)) bad.push_back("pooled p-value out of range");
  }
  const auto ks = stats::ks_test_uniform(pooled);
  if (pooled.size() < kMetaKsMinValues || ks.p <= kMetaKsMinP) bad.push_back("pooled p-values not uniform");

  // Determinism: equal seeds give equal streams.
  for (std::string_view n : generator_names()) {
    auto a = seeded(std::string(n), "acceptance determinism");
    auto b = seeded(std::string(n), "acceptance determinism");
    Bytes x(4096), y(4096);
    a->fill_bytes(x);
    b->fill_bytes(y);
    if (x != y) bad.push_back("stream of " + std::string(n) + " not deterministic");
  }

  // The accumulator never claims more than asked for or than its sources vouch.
  std::uint64_t state = 12345;
  auto next = [&state] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  };
  std::size_t accumulations = 0;
  for (int c = 0; c < 500; ++c) {
    std::vector<std::unique_ptr<entropy::CallbackSource>> owned;
    std::vector<entropy::EntropySource*> ptrs;
    const std::size_t k = 1 + next() % 4;
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t size = 1 + next() % 32;
      const auto bits = static_cast<unsigned>(next() % (8 * size + 1));
      const bool blocked = next() % 5 == 0;
      owned.push_back(std::make_unique<entropy::CallbackSource>(
          "s", size, bits, [](std::size_t n) { return Bytes(n, 0x5A); }, [blocked] { return !blocked; }));
      ptrs.push_back(owned.back().get());
    }
    const auto required = static_cast<unsigned>(1 + next() % 600);
    std::uint64_t available_claim = 0;
    for (auto* p : ptrs) {
      if (p->available()) available_claim += p->claimed_bits_per_sample();
    }
    try {
      const SeedMaterial m = entropy::accumulate(ptrs, required);
      ++accumulations;
      if (m.claimed_entropy_bits() > required || m.claimed_entropy_bits() > 8 * m.bytes().size()) {
        bad.push_back("accumulator over-claimed");
      }
    } catch (const Error& e) {
      if (e.code() != Errc::EntropyExhausted || available_claim != 0) bad.push_back("unexpected accumulator failure");
    }
  }

  // Instantiation refuses weak claims and short CTR seeds.
  std::size_t rejections = 0;
  for (crypto::CsprngAlgorithm alg : crypto::kAllCsprngAlgorithms) {
    for (unsigned claim : {0u, 1u, 64u, 127u}) {
      try {
        crypto::CsprngInstance::instantiate(alg, SeedMaterial(Bytes(32, 7), claim), kMinStrength);
        bad.push_back("accepted a " + std::to_string(claim) + "-bit claim");
      } catch (const Error& e) {
        if (e.code() != Errc::InsufficientEntropy) bad.push_back("wrong code for weak claim");
        ++rejections;
      }
    }
  }
  for (std::size_t len = 16; len < 32; ++len) {
    try {
      crypto::CsprngInstance::instantiate(crypto::CsprngAlgorithm::CtrDrbg, SeedMaterial::full_entropy(Bytes(len, 7)),
                                          kMinStrength);
      bad.push_back("accepted a " + std::to_string(len) + "-byte ctr-drbg seed");
    } catch (const Error& e) {
      if (e.code() != Errc::SeedTooShort) bad.push_back("wrong code for short ctr-drbg seed");
      ++rejections;
    }
  }

  std::string s = std::to_string(pooled.size()) + " pooled p-values, meta-KS p " + fmt("%.4f", ks.p) + ", " +
                  std::to_string(generator_names().size()) + " generators deterministic, " +
                  std::to_string(accumulations) + " accumulations within claims, " + std::to_string(rejections) +
                  " weak seeds rejected";
  if (!bad.empty()) s += "; first problem: " + bad.front();
  return {bad.empty(), s};
}

struct Shell {
  int code;
  std::string out;
};

Shell shell(const std::string& cmd) {
  const auto path = std::filesystem::temp_directory_path() / ("iotrng_acceptance_" + std::to_string(::getpid()));
  const int status = std::system((cmd + " > '" + path.string() + "' 2>/dev/null").c_str());
  std::ifstream f(path, std::ios::binary);
  std::string out((std::istreambuf_iterator<char>(f)), {});
  std::filesystem::remove(path);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool on_path(const std::string& tool) {
  return std::system(("command -v " + tool + " > /dev/null 2>&1").c_str()) == 0;
}

// 8. Command line contract.
Outcome criterion8(const std::string& cli) {
  if (cli.empty() || !std::filesystem::exists(cli)) return {false, "command line tool not found at '" + cli + "'"};
  const std::string q = "'" + cli + "'";
  std::vector<std::string> bad;
  std::size_t checked = 0;
  const std::string crypto_seed = "00112233445566778899aabbccddeeff00112233445566778899aabbccddeeff";
  for (const std::string gen : {"xorshift32", "mt19937", "lfsr16", "sha256prng", "hash-drbg", "ctr-drbg", "fortuna"}) {
    const bool is_crypto = find_descriptor(gen).klass == GeneratorClass::CryptoSecure;
    const std::string seed = is_crypto ? crypto_seed : "2a";
    const std::string args = gen + " --seed " + seed + " --bytes 65539";
    const Shell a = shell(q + " generate " + args + " --format raw-le-words");
    const Shell b = shell(q + " generate " + args + " --format raw-le-words");
    const Shell e = shell(q + " export " + args);
    ++checked;
    if (a.code != 0 || a.out.size() != 65539) bad.push_back("generate " + gen + " failed");
    if (a.out != b.out) bad.push_back("generate " + gen + " not byte-identical");
    if (a.out != e.out) bad.push_back("export " + gen + " differs from generate");
  }
  const Shell first = shell(q + " generate xorshift32 --seed 01 --bytes 4 --format raw-le-words");
  const bool word_ok = first.out.size() == 4 && static_cast<std::uint8_t>(first.out[0]) == 0x21 &&
                       static_cast<std::uint8_t>(first.out[1]) == 0x20 && static_cast<std::uint8_t>(first.out[2]) == 0x04 &&
                       first.out[3] == 0;
  if (!word_ok) bad.push_back("xorshift32 seed 01 first word is not 270369");

  const int ok_code = shell(q + " generate knuth-lcg --seed 1 --bytes 16").code;
  const int fail_code =
      shell(q + " test lfsr16 --seed 1 --sequences 20 --bits 100000 --tests Frequency Serial").code;
  const int usage_weak = shell(q + " generate sha256prng --seed 00 --bytes 16").code;
  const int usage_unknown = shell(q + " generate rc4 --bytes 16").code;
  const int usage_flags = shell(q + " generate xorshift32 --bytes 0").code;
  if (ok_code != 0) bad.push_back("success exit code " + std::to_string(ok_code));
  if (fail_code != 1) bad.push_back("suite failure exit code " + std::to_string(fail_code));
  if (usage_weak != 2 || usage_unknown != 2 || usage_flags != 2) bad.push_back("usage error exit code");

  std::string dieharder = "dieharder SKIP (not installed)";
  if (on_path("dieharder")) {
    const Shell d = shell(q + " export sha256prng --seed " + crypto_seed + " | dieharder -g 200 -d 0");
    dieharder = d.code == 0 && d.out.find("diehard_birthdays") != std::string::npos ? "dieharder accepted the stream"
                                                                                     : "dieharder rejected the stream";
    if (d.code != 0) bad.push_back("dieharder smoke test failed");
  }
  std::string s = std::to_string(checked) + " generators byte-identical with export == generate, exit codes 0/" +
                  std::to_string(fail_code) + "/" + std::to_string(usage_weak) + ", " + dieharder;
  if (!bad.empty()) s += "; first problem: " + bad.front();
  return {bad.empty(), s};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> selected;
  std::string cli_path;
  app.add_option("--criterion", selected, "Criteria to run (default: all)")->check(CLI::Range(1, 8));
  app.add_option("--cli", cli_path, "Path to the iotrng command line tool");
  CLI11_PARSE(app, argc, argv);
  if (selected.empty()) selected = {1, 2, 3, 4, 5, 6, 7, 8};

  const std::map<int, std::pair<std::string, std::function<Outcome()>>> criteria = {
      {1, {"DRBG known answers", criterion1}},
      {2, {"NIST suite positive results", criterion2}},
      {3, {"NIST suite negative results", criterion3}},
      {4, {"reference p-value equivalence", criterion4}},
      {5, {"PUF calibration", criterion5}},
      {6, {"performance orderings", criterion6}},
      {7, {"property suites", criterion7}},
      {8, {"command line contract", [&cli_path] { return criterion8(cli_path); }}},
  };
  bool all = true;
  for (int id : selected) {
    const auto& [title, fn] = criteria.at(id);
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title << ": " << o.summary
              << fmt(" [%.1f s]", secs) << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
