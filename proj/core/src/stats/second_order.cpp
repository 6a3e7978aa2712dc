// SPDX-License-Identifier: Apache-2.0
#include "iotrng/stats/second_order.hpp"

#include <algorithm>
#include <boost/math/distributions/binomial.hpp>
#include <cmath>

#include "iotrng/error.hpp"
#include "iotrng/stats/special.hpp"

namespace iotrng::stats {

std::size_t proportion_threshold(std::size_t m, double alpha) {
  if (m == 0) return 0;
  const double p = 1.0 - alpha;
  const double md = static_cast<double>(m);
  const double bound = md * (p - 3.0 * std::sqrt(p * (1.0 - p) / md));
  return bound <= 0.0 ? 0 : static_cast<std::size_t>(std::floor(bound));
}

SecondOrderResult second_order_analysis(std::span<const double> p_values, const SecondOrderConfig& config) {
  if (config.bins < 2) throw Error(Errc::InvalidArgument, "second-order analysis needs at least two bins");
  SecondOrderResult r;
  r.sequences = p_values.size();
  r.histogram.assign(config.bins, 0);
  if (p_values.empty()) return r;

  for (const double p : p_values) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error(Errc::InvalidArgument, "p-value outside [0, 1]");
    if (p >= config.alpha) ++r.passed;
    auto bin = static_cast<std::size_t>(std::floor(p * config.bins));
    r.histogram[std::min<std::size_t>(bin, config.bins - 1)]++;
  }
  r.threshold = proportion_threshold(r.sequences, config.alpha);
  r.proportion = static_cast<double>(r.passed) / static_cast<double>(r.sequences);
  r.proportion_ok = r.passed >= r.threshold;

  const double expected = static_cast<double>(r.sequences) / config.bins;
  for (const std::size_t f : r.histogram) r.chi2 += std::pow(static_cast<double>(f) - expected, 2) / expected;
  r.p2 = igamc((config.bins - 1) / 2.0, r.chi2 / 2.0);
  r.uniformity_ok = r.p2 >= config.alpha2;
  r.pass = r.proportion_ok && r.uniformity_ok;
  return r;
}

double null_statistic_failure_probability(std::size_t m, const SecondOrderConfig& config) {
  if (m == 0) return 1.0;
  const std::size_t threshold = proportion_threshold(m, config.alpha);
  double q = config.alpha2;
  if (threshold > 0) {
    const boost::math::binomial_distribution<double> passes(static_cast<double>(m), 1.0 - config.alpha);
    q += boost::math::cdf(passes, static_cast<double>(threshold - 1));
  }
  return std::min(q, 1.0);
}

std::size_t allowed_statistic_failures(std::size_t statistics, double q, double level) {
  if (statistics <= 1) return 0;
  const boost::math::binomial_distribution<double> fails(static_cast<double>(statistics), std::clamp(q, 0.0, 1.0));
  for (std::size_t k = 0; k < statistics; ++k) {
    if (boost::math::cdf(boost::math::complement(fails, static_cast<double>(k))) <= level) return k;
  }
  return statistics;
}

}  // namespace iotrng::stats
