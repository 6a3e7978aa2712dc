// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "iotrng/stats/nist.hpp"
#include "iotrng/stats/second_order.hpp"

namespace iotrng::stats {

struct SuiteConfig {
  std::size_t sequence_bits = 1'000'000;
  std::size_t sequences = 100;
  SecondOrderConfig second_order;
  NistParams params;
  std::vector<NistTest> tests{kAllNistTests.begin(), kAllNistTests.end()};
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
  /// Significance of the rule that bounds failing statistics per test.
  double multi_statistic_level = 0.01;
};

enum class Verdict { Pass, Fail, NotApplicable };
std::string_view verdict_name(Verdict v) noexcept;

struct StatisticResult {
  std::string label;
  std::vector<double> p_values;  // applicable sequences only, in sequence order
  SecondOrderResult second_order;
};

struct TestResult {
  NistTest test;
  std::string name;
  std::vector<StatisticResult> statistics;
  std::size_t not_applicable = 0;  // sequences skipped (excursion tests only)
  std::size_t failed_statistics = 0;
  std::size_t allowed_failures = 0;
  Verdict verdict = Verdict::Fail;
};

struct TestReport {
  std::string generator;
  SuiteConfig config;
  std::vector<TestResult> tests;
  bool pass = false;

  std::size_t count(Verdict v) const noexcept;
  const TestResult* find(NistTest test) const noexcept;
};

/// Fills the buffer with the next bytes of the stream; throws
/// SourceExhausted when it runs out.
using ByteReader = std::function<void(std::span<std::uint8_t>)>;

/// Reads config.sequences consecutive chunks of ceil(n / 8) bytes, runs each
/// configured test on every sequence, and applies second-order analysis per
/// statistic. Sequences may be evaluated in parallel; results are assembled
/// in sequence order.
TestReport run_suite(const ByteReader& source, const SuiteConfig& config, std::string generator_name);
TestReport run_suite(std::span<const BitSequence> sequences, const SuiteConfig& config, std::string generator_name);

/// Throws SequenceTooShort or InvalidArgument when the configuration cannot
/// run every selected test.
void validate(const SuiteConfig& config);

/// {generator, config, tests: [{name, statistics: [{p_values_summary,
/// proportion, threshold, p2, verdict}]}], suite_verdict}. Output is a pure
/// function of the report.
std::string report_to_json(const TestReport& report, bool include_p_values = false, int indent = 2);
/// Fixed-width table, one line per test.
std::string report_to_table(const TestReport& report);

}  // namespace iotrng::stats
