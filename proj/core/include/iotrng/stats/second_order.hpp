// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace iotrng::stats {

struct SecondOrderConfig {
  double alpha = 0.01;
  double alpha2 = 0.0001;
  unsigned bins = 10;
};

struct SecondOrderResult {
  std::size_t sequences = 0;  // applicable p-values
  std::size_t passed = 0;     // p >= alpha
  std::size_t threshold = 0;  // minimum passing count
  double proportion = 0.0;
  bool proportion_ok = false;
  std::vector<std::size_t> histogram;
  double chi2 = 0.0;
  double p2 = 0.0;
  bool uniformity_ok = false;
  bool pass = false;
};

/// floor(m * (p - 3 sqrt(p (1 - p) / m))) with p = 1 - alpha; 96 for m = 100.
std::size_t proportion_threshold(std::size_t m, double alpha);

/// Proportion check plus chi-square uniformity of the p-values over equal
/// bins: p2 = igamc((bins - 1) / 2, chi2 / 2). An empty input fails.
SecondOrderResult second_order_analysis(std::span<const double> p_values, const SecondOrderConfig& config = {});

/// Probability that one statistic fails second-order analysis under the null
/// hypothesis: exact binomial proportion failure plus alpha2.
double null_statistic_failure_probability(std::size_t m, const SecondOrderConfig& config = {});

/// Smallest k with P(Bin(statistics, q) > k) <= level: the number of failing
/// statistics a multi-statistic test tolerates. Zero for a single statistic.
std::size_t allowed_statistic_failures(std::size_t statistics, double q, double level = 0.01);

}  // namespace iotrng::stats
