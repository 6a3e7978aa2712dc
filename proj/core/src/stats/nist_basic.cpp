// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <string>

#include "iotrng/error.hpp"
#include "iotrng/stats/nist.hpp"
#include "iotrng/stats/special.hpp"

namespace iotrng::stats {

namespace {

void require_length(Bits bits, std::size_t min, std::string_view test) {
  if (bits.size() < min) {
    throw Error(Errc::SequenceTooShort, std::string(test) + " needs at least " + std::to_string(min) + " bits, got " +
                                            std::to_string(bits.size()));
  }
}

double chi2_categories(const std::size_t* nu, const double* pi, std::size_t k, double n) {
  double chi2 = 0.0;
  for (std::size_t i = 0; i < k; ++i) chi2 += std::pow(static_cast<double>(nu[i]) - n * pi[i], 2) / (n * pi[i]);
  return chi2;
}

}  // namespace

std::string_view nist_test_name(NistTest test) noexcept {
  switch (test) {
    case NistTest::Frequency: return "Frequency";
    case NistTest::BlockFrequency: return "BlockFrequency";
    case NistTest::CumulativeSums: return "CumulativeSums";
    case NistTest::Runs: return "Runs";
    case NistTest::LongestRun: return "LongestRun";
    case NistTest::Rank: return "Rank";
    case NistTest::Dft: return "FFT";
    case NistTest::NonOverlappingTemplate: return "NonOverlappingTemplate";
    case NistTest::OverlappingTemplate: return "OverlappingTemplate";
    case NistTest::Universal: return "Universal";
    case NistTest::ApproximateEntropy: return "ApproximateEntropy";
    case NistTest::RandomExcursions: return "RandomExcursions";
    case NistTest::RandomExcursionsVariant: return "RandomExcursionsVariant";
    case NistTest::Serial: return "Serial";
    case NistTest::LinearComplexity: return "LinearComplexity";
  }
  return "?";
}

NistTest parse_nist_test(std::string_view name) {
  for (NistTest t : kAllNistTests) {
    if (nist_test_name(t) == name) return t;
  }
  throw Error(Errc::InvalidArgument, "unknown NIST test '" + std::string(name) + "'");
}

std::size_t statistic_count(NistTest test, const NistParams& params) {
  switch (test) {
    case NistTest::CumulativeSums:
    case NistTest::Serial:
      return 2;
    case NistTest::NonOverlappingTemplate:
      return aperiodic_templates(params.template_m).size();
    case NistTest::RandomExcursions:
      return 8;
    case NistTest::RandomExcursionsVariant:
      return 18;
    default:
      return 1;
  }
}

std::vector<std::string> statistic_labels(NistTest test, const NistParams& params) {
  switch (test) {
    case NistTest::CumulativeSums:
      return {"forward", "reverse"};
    case NistTest::Serial:
      return {"p1", "p2"};
    case NistTest::NonOverlappingTemplate: {
      std::vector<std::string> out;
      for (const std::uint32_t t : aperiodic_templates(params.template_m)) {
        std::string s;
        for (int b = static_cast<int>(params.template_m) - 1; b >= 0; --b) s += ((t >> b) & 1u) ? '1' : '0';
        out.push_back(std::move(s));
      }
      return out;
    }
    case NistTest::RandomExcursions: {
      std::vector<std::string> out;
      for (int x : {-4, -3, -2, -1, 1, 2, 3, 4}) out.push_back("x=" + std::to_string(x));
      return out;
    }
    case NistTest::RandomExcursionsVariant: {
      std::vector<std::string> out;
      for (int x = -9; x <= 9; ++x) {
        if (x != 0) out.push_back("x=" + std::to_string(x));
      }
      return out;
    }
    default:
      return {std::string(nist_test_name(test))};
  }
}

std::vector<double> run_nist_test(NistTest test, Bits bits, const NistParams& params) {
  switch (test) {
    case NistTest::Frequency: return {frequency_test(bits)};
    case NistTest::BlockFrequency: return {block_frequency_test(bits, params.block_frequency_m)};
    case NistTest::CumulativeSums: {
      const auto p = cumulative_sums_test(bits);
      return {p.begin(), p.end()};
    }
    case NistTest::Runs: return {runs_test(bits)};
    case NistTest::LongestRun: return {longest_run_test(bits)};
    case NistTest::Rank: return {rank_test(bits)};
    case NistTest::Dft: return {dft_test(bits)};
    case NistTest::NonOverlappingTemplate: return non_overlapping_template_test(bits, params.template_m);
    case NistTest::OverlappingTemplate: return {overlapping_template_test(bits, params.overlapping_m)};
    case NistTest::Universal: return {universal_test(bits)};
    case NistTest::ApproximateEntropy: return {approximate_entropy_test(bits, params.approximate_entropy_m)};
    case NistTest::RandomExcursions: {
      const auto p = random_excursions_test(bits);
      return {p.begin(), p.end()};
    }
    case NistTest::RandomExcursionsVariant: {
      const auto p = random_excursions_variant_test(bits);
      return {p.begin(), p.end()};
    }
    case NistTest::Serial: {
      const auto p = serial_test(bits, params.serial_m);
      return {p.begin(), p.end()};
    }
    case NistTest::LinearComplexity: return {linear_complexity_test(bits, params.linear_complexity_m)};
  }
  throw Error(Errc::InvalidArgument, "unknown test");
}

double frequency_test(Bits bits) {
  require_length(bits, 100, "frequency test");
  long long s = 0;
  for (const std::uint8_t b : bits) s += 2 * static_cast<int>(b) - 1;
  const double s_obs = std::fabs(static_cast<double>(s)) / std::sqrt(static_cast<double>(bits.size()));
  return erfc(s_obs / std::sqrt(2.0));
}

double block_frequency_test(Bits bits, std::size_t m) {
  if (m == 0) throw Error(Errc::InvalidArgument, "block length must be positive");
  require_length(bits, std::max<std::size_t>(100, m), "block frequency test");
  const std::size_t n_blocks = bits.size() / m;
  double sum = 0.0;
  for (std::size_t i = 0; i < n_blocks; ++i) {
    std::size_t ones = 0;
    for (std::size_t j = 0; j < m; ++j) ones += bits[i * m + j];
    const double v = static_cast<double>(ones) / static_cast<double>(m) - 0.5;
    sum += v * v;
  }
  const double chi2 = 4.0 * static_cast<double>(m) * sum;
  return igamc(static_cast<double>(n_blocks) / 2.0, chi2 / 2.0);
}

std::array<double, 2> cumulative_sums_test(Bits bits) {
  require_length(bits, 100, "cumulative sums test");
  long long s = 0, sup = 0, inf = 0;
  for (const std::uint8_t b : bits) {
    s += b ? 1 : -1;
    sup = std::max(sup, s);
    inf = std::min(inf, s);
  }
  const long long z = std::max(sup, -inf);
  const long long zrev = std::max(sup - s, s - inf);
  const long long n = static_cast<long long>(bits.size());
  const double sqrtn = std::sqrt(static_cast<double>(n));

  // Summation bounds use C integer division, as in the reference suite.
  auto p_value = [&](long long zz) {
    double sum1 = 0.0;
    for (long long k = (-n / zz + 1) / 4; k <= (n / zz - 1) / 4; ++k) {
      sum1 += normal_cdf(static_cast<double>((4 * k + 1) * zz) / sqrtn);
      sum1 -= normal_cdf(static_cast<double>((4 * k - 1) * zz) / sqrtn);
    }
    double sum2 = 0.0;
    for (long long k = (-n / zz - 3) / 4; k <= (n / zz - 1) / 4; ++k) {
      sum2 += normal_cdf(static_cast<double>((4 * k + 3) * zz) / sqrtn);
      sum2 -= normal_cdf(static_cast<double>((4 * k + 1) * zz) / sqrtn);
    }
    return std::clamp(1.0 - sum1 + sum2, 0.0, 1.0);
  };
  return {p_value(z), p_value(zrev)};
}

double runs_test(Bits bits) {
  require_length(bits, 100, "runs test");
  const double n = static_cast<double>(bits.size());
  std::size_t ones = 0;
  for (const std::uint8_t b : bits) ones += b;
  const double pi = static_cast<double>(ones) / n;
  if (std::fabs(pi - 0.5) > 2.0 / std::sqrt(n)) {
    throw Error(Errc::PretestFailed, "runs test frequency pretest failed (pi = " + std::to_string(pi) + ")");
  }
  std::size_t v = 1;
  for (std::size_t k = 1; k < bits.size(); ++k) v += bits[k] != bits[k - 1];
  const double arg = std::fabs(static_cast<double>(v) - 2.0 * n * pi * (1.0 - pi)) /
                     (2.0 * std::sqrt(2.0 * n) * pi * (1.0 - pi));
  return erfc(arg);
}

double longest_run_test(Bits bits) {
  require_length(bits, 128, "longest run test");
  const std::size_t n = bits.size();
  std::size_t k, m;
  unsigned v[7] = {};
  double pi[7] = {};
  if (n < 6272) {
    k = 3;
    m = 8;
    const unsigned vv[] = {1, 2, 3, 4};
    const double pp[] = {0.21484375, 0.3671875, 0.23046875, 0.1875};
    std::copy(std::begin(vv), std::end(vv), v);
    std::copy(std::begin(pp), std::end(pp), pi);
  } else if (n < 750000) {
    k = 5;
    m = 128;
    const unsigned vv[] = {4, 5, 6, 7, 8, 9};
    const double pp[] = {0.1174035788, 0.242955959, 0.249363483, 0.17517706, 0.102701071, 0.112398847};
    std::copy(std::begin(vv), std::end(vv), v);
    std::copy(std::begin(pp), std::end(pp), pi);
  } else {
    k = 6;
    m = 10000;
    const unsigned vv[] = {10, 11, 12, 13, 14, 15, 16};
    const double pp[] = {0.0882, 0.2092, 0.2483, 0.1933, 0.1208, 0.0675, 0.0727};
    std::copy(std::begin(vv), std::end(vv), v);
    std::copy(std::begin(pp), std::end(pp), pi);
  }
  const std::size_t n_blocks = n / m;
  std::size_t nu[7] = {};
  for (std::size_t i = 0; i < n_blocks; ++i) {
    unsigned longest = 0, run = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (bits[i * m + j]) {
        longest = std::max(longest, ++run);
      } else {
        run = 0;
      }
    }
    if (longest < v[0]) ++nu[0];
    for (std::size_t c = 0; c <= k; ++c) {
      if (longest == v[c]) ++nu[c];
    }
    if (longest > v[k]) ++nu[k];
  }
  const double chi2 = chi2_categories(nu, pi, k + 1, static_cast<double>(n_blocks));
  return igamc(static_cast<double>(k) / 2.0, chi2 / 2.0);
}

unsigned gf2_rank(std::array<std::uint32_t, 32> rows) noexcept {
  unsigned rank = 0;
  for (int col = 31; col >= 0 && rank < 32; --col) {
    const std::uint32_t mask = 1u << col;
    std::size_t pivot = rank;
    while (pivot < 32 && !(rows[pivot] & mask)) ++pivot;
    if (pivot == 32) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < 32; ++r) {
      if (r != rank && (rows[r] & mask)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

double rank_test(Bits bits) {
  constexpr std::size_t kDim = 32;
  require_length(bits, 38 * kDim * kDim, "rank test");
  const std::size_t n_matrices = bits.size() / (kDim * kDim);

  // Reference-suite probabilities for full rank, rank 31, and lower.
  auto prob = [](int r) {
    double product = 1.0;
    for (int i = 0; i <= r - 1; ++i) {
      product *= ((1.0 - std::pow(2, i - 32)) * (1.0 - std::pow(2, i - 32))) / (1.0 - std::pow(2, i - r));
    }
    return std::pow(2, r * (32 + 32 - r) - 32 * 32) * product;
  };
  const double p32 = prob(32);
  const double p31 = prob(31);
  const double p30 = 1.0 - (p32 + p31);

  std::size_t f32 = 0, f31 = 0;
  for (std::size_t k = 0; k < n_matrices; ++k) {
    std::array<std::uint32_t, 32> rows{};
    const std::size_t base = k * kDim * kDim;
    for (std::size_t i = 0; i < kDim; ++i) {
      std::uint32_t row = 0;
      for (std::size_t j = 0; j < kDim; ++j) row = (row << 1) | bits[base + i * kDim + j];
      rows[i] = row;
    }
    const unsigned r = gf2_rank(rows);
    if (r == 32) ++f32;
    else if (r == 31) ++f31;
  }
  const double n = static_cast<double>(n_matrices);
  const double f30 = n - static_cast<double>(f32 + f31);
  const double chi2 = std::pow(static_cast<double>(f32) - n * p32, 2) / (n * p32) +
                      std::pow(static_cast<double>(f31) - n * p31, 2) / (n * p31) +
                      std::pow(f30 - n * p30, 2) / (n * p30);
  return std::exp(-chi2 / 2.0);
}

}  // namespace iotrng::stats
