// SPDX-License-Identifier: Apache-2.0
//
// The fifteen SP 800-22 tests with sts-2.1.2 parameterization. Every function
// takes one bit per element and returns p-values; multi-statistic tests
// return them in the reference suite's order.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "iotrng/stats/bit_sequence.hpp"

namespace iotrng::stats {

enum class NistTest {
  Frequency,
  BlockFrequency,
  CumulativeSums,
  Runs,
  LongestRun,
  Rank,
  Dft,
  NonOverlappingTemplate,
  OverlappingTemplate,
  Universal,
  ApproximateEntropy,
  RandomExcursions,
  RandomExcursionsVariant,
  Serial,
  LinearComplexity,
};

inline constexpr std::array<NistTest, 15> kAllNistTests = {
    NistTest::Frequency,          NistTest::BlockFrequency,      NistTest::CumulativeSums,
    NistTest::Runs,               NistTest::LongestRun,          NistTest::Rank,
    NistTest::Dft,                NistTest::NonOverlappingTemplate, NistTest::OverlappingTemplate,
    NistTest::Universal,          NistTest::ApproximateEntropy,  NistTest::RandomExcursions,
    NistTest::RandomExcursionsVariant, NistTest::Serial,         NistTest::LinearComplexity};

struct NistParams {
  std::size_t block_frequency_m = 128;
  unsigned template_m = 9;
  unsigned overlapping_m = 9;
  unsigned approximate_entropy_m = 10;
  unsigned serial_m = 16;
  std::size_t linear_complexity_m = 500;
};

std::string_view nist_test_name(NistTest test) noexcept;
/// Throws InvalidArgument for unknown names.
NistTest parse_nist_test(std::string_view name);
/// Statistics per sequence (188 in total under the defaults).
std::size_t statistic_count(NistTest test, const NistParams& params = {});
/// Labels of the individual statistics, e.g. template bit patterns.
std::vector<std::string> statistic_labels(NistTest test, const NistParams& params = {});

// Errors: SequenceTooShort below each test's minimum length; runs_test throws
// PretestFailed when the frequency pretest fails; the excursion tests throw
// NotApplicable with fewer than max(0.005 sqrt(n), 500) cycles.
double frequency_test(Bits bits);
double block_frequency_test(Bits bits, std::size_t m = 128);
/// {forward, reverse}
std::array<double, 2> cumulative_sums_test(Bits bits);
double runs_test(Bits bits);
double longest_run_test(Bits bits);
double rank_test(Bits bits);
double dft_test(Bits bits);
std::vector<double> non_overlapping_template_test(Bits bits, unsigned m = 9);
double overlapping_template_test(Bits bits, unsigned m = 9);
double universal_test(Bits bits);
double approximate_entropy_test(Bits bits, unsigned m = 10);
/// States -4..-1, 1..4.
std::array<double, 8> random_excursions_test(Bits bits);
/// States -9..-1, 1..9.
std::array<double, 18> random_excursions_variant_test(Bits bits);
/// {p1 from del psi^2, p2 from del^2 psi^2}
std::array<double, 2> serial_test(Bits bits, unsigned m = 16);
double linear_complexity_test(Bits bits, std::size_t m = 500);

std::vector<double> run_nist_test(NistTest test, Bits bits, const NistParams& params = {});

/// Aperiodic m-bit templates in lexicographic order (148 for m = 9).
std::vector<std::uint32_t> aperiodic_templates(unsigned m);
/// GF(2) rank of a 32x32 matrix given as rows, bit 31 = column 0.
unsigned gf2_rank(std::array<std::uint32_t, 32> rows) noexcept;
/// Linear complexity of a bit string (Berlekamp-Massey).
std::size_t linear_complexity(Bits bits);

}  // namespace iotrng::stats
