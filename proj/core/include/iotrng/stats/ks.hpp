// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>

namespace iotrng::stats {

struct KsResult {
  double d = 0.0;
  double p = 0.0;
  std::size_t n = 0;
  double mean = 0.0;
  double sd = 0.0;
};

/// One-sample KS against N(mean, sd) with both moments estimated from the
/// samples; p from the asymptotic Kolmogorov distribution of sqrt(n) D.
/// With lattice_step h > 0 the samples are taken to live on a grid of
/// spacing h and the empirical CDF at each grid value x is compared with the
/// normal CDF at x + h/2. Throws TooFewSamples below 8 samples and
/// ZeroVariance for constant input.
KsResult ks_test_normal(std::span<const double> samples, double lattice_step = 0.0);

/// One-sample KS against U(0, 1), used for pooled p-values.
KsResult ks_test_uniform(std::span<const double> samples);

}  // namespace iotrng::stats
