// SPDX-License-Identifier: Apache-2.0
#include "iotrng/stats/suite.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <thread>

#include "iotrng/error.hpp"

namespace iotrng::stats {

namespace {

// Per sequence and test: p-values, or nothing when not applicable.
using Outcome = std::optional<std::vector<double>>;

Outcome evaluate(NistTest test, Bits bits, const NistParams& params) {
  try {
    return run_nist_test(test, bits, params);
  } catch (const Error& e) {
    if (e.code() == Errc::PretestFailed) return std::vector<double>(statistic_count(test, params), 0.0);
    if (e.code() == Errc::NotApplicable &&
        (test == NistTest::RandomExcursions || test == NistTest::RandomExcursionsVariant)) {
      return std::nullopt;
    }
    throw;
  }
}

std::size_t min_bits(NistTest test, const NistParams& p) {
  switch (test) {
    case NistTest::Frequency:
    case NistTest::CumulativeSums:
    case NistTest::Runs:
    case NistTest::ApproximateEntropy:
    case NistTest::Serial:
      return 100;
    case NistTest::BlockFrequency: return std::max<std::size_t>(100, p.block_frequency_m);
    case NistTest::LongestRun: return 128;
    case NistTest::Rank: return 38 * 1024;
    case NistTest::Dft: return 1000;
    case NistTest::NonOverlappingTemplate: return 8 * 2 * static_cast<std::size_t>(p.template_m);
    case NistTest::OverlappingTemplate: return 1032;
    case NistTest::Universal: return 387840;
    case NistTest::RandomExcursions:
    case NistTest::RandomExcursionsVariant:
      return 1;
    case NistTest::LinearComplexity: return p.linear_complexity_m;
  }
  return 1;
}

TestReport assemble(const std::vector<std::vector<Outcome>>& outcomes, const SuiteConfig& config, std::string name) {
  TestReport report;
  report.generator = std::move(name);
  report.config = config;
  const std::size_t m = outcomes.size();
  for (std::size_t t = 0; t < config.tests.size(); ++t) {
    const NistTest test = config.tests[t];
    TestResult tr;
    tr.test = test;
    tr.name = std::string(nist_test_name(test));
    const std::vector<std::string> labels = statistic_labels(test, config.params);
    tr.statistics.resize(labels.size());
    for (std::size_t s = 0; s < labels.size(); ++s) tr.statistics[s].label = labels[s];
    for (std::size_t seq = 0; seq < m; ++seq) {
      const Outcome& o = outcomes[seq][t];
      if (!o) {
        ++tr.not_applicable;
        continue;
      }
      for (std::size_t s = 0; s < labels.size(); ++s) tr.statistics[s].p_values.push_back((*o)[s]);
    }
    const std::size_t applicable = m - tr.not_applicable;
    if (applicable == 0) {
      tr.verdict = Verdict::NotApplicable;
    } else {
      for (StatisticResult& sr : tr.statistics) {
        sr.second_order = second_order_analysis(sr.p_values, config.second_order);
        if (!sr.second_order.pass) ++tr.failed_statistics;
      }
      const double q = null_statistic_failure_probability(applicable, config.second_order);
      tr.allowed_failures = allowed_statistic_failures(tr.statistics.size(), q, config.multi_statistic_level);
      tr.verdict = tr.failed_statistics <= tr.allowed_failures ? Verdict::Pass : Verdict::Fail;
    }
    report.tests.push_back(std::move(tr));
  }
  report.pass = !report.tests.empty() && report.count(Verdict::Pass) == report.tests.size();
  return report;
}

template <typename GetBits>
TestReport run(std::size_t m, GetBits get_bits, const SuiteConfig& config, std::string name) {
  std::vector<std::vector<Outcome>> outcomes(m, std::vector<Outcome>(config.tests.size()));
  std::vector<std::exception_ptr> errors(m);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t seq; (seq = next.fetch_add(1)) < m;) {
      try {
        const std::vector<std::uint8_t> bits = get_bits(seq);
        for (std::size_t t = 0; t < config.tests.size(); ++t) {
          outcomes[seq][t] = evaluate(config.tests[t], bits, config.params);
        }
      } catch (...) {
        errors[seq] = std::current_exception();
      }
    }
  };
  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, m));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return assemble(outcomes, config, std::move(name));
}

}  // namespace

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

std::size_t TestReport::count(Verdict v) const noexcept {
  return static_cast<std::size_t>(std::count_if(tests.begin(), tests.end(), [v](const TestResult& t) { return t.verdict == v; }));
}

const TestResult* TestReport::find(NistTest test) const noexcept {
  for (const TestResult& t : tests) {
    if (t.test == test) return &t;
  }
  return nullptr;
}

void validate(const SuiteConfig& config) {
  if (config.sequences == 0) throw Error(Errc::InvalidArgument, "at least one sequence is required");
  if (config.sequence_bits == 0) throw Error(Errc::InvalidArgument, "sequence length must be positive");
  if (config.tests.empty()) throw Error(Errc::InvalidArgument, "no tests selected");
  for (const NistTest t : config.tests) {
    const std::size_t need = min_bits(t, config.params);
    if (config.sequence_bits < need) {
      throw Error(Errc::SequenceTooShort, std::string(nist_test_name(t)) + " needs sequences of at least " +
                                              std::to_string(need) + " bits");
    }
  }
}

TestReport run_suite(const ByteReader& source, const SuiteConfig& config, std::string generator_name) {
  validate(config);
  const std::size_t n = config.sequence_bits;
  const std::size_t bytes = (n + 7) / 8;
  // The stream is consumed in sequence order up front so the assignment of
  // bytes to sequences never depends on thread scheduling.
  std::vector<Bytes> raw(config.sequences, Bytes(bytes));
  for (Bytes& b : raw) source(b);
  return run(
      config.sequences, [&](std::size_t seq) { return BitSequence::from_bytes(raw[seq], n).unpack(); }, config,
      std::move(generator_name));
}

TestReport run_suite(std::span<const BitSequence> sequences, const SuiteConfig& config, std::string generator_name) {
  SuiteConfig effective = config;
  effective.sequences = sequences.size();
  if (!sequences.empty()) effective.sequence_bits = sequences.front().size();
  validate(effective);
  for (const BitSequence& s : sequences) {
    if (s.size() != effective.sequence_bits) throw Error(Errc::LengthMismatch, "sequences differ in length");
  }
  return run(
      sequences.size(), [&](std::size_t seq) { return sequences[seq].unpack(); }, effective,
      std::move(generator_name));
}

}  // namespace iotrng::stats
