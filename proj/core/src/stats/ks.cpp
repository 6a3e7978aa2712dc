// SPDX-License-Identifier: Apache-2.0
#include "iotrng/stats/ks.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "iotrng/error.hpp"
#include "iotrng/stats/special.hpp"

namespace iotrng::stats {

namespace {

template <typename Cdf>
double ks_statistic(std::vector<double>& x, Cdf cdf) {
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = cdf(x[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

}  // namespace

KsResult ks_test_normal(std::span<const double> samples, double lattice_step) {
  if (samples.size() < 8) throw Error(Errc::TooFewSamples, "ks test needs at least 8 samples");
  if (lattice_step < 0.0) throw Error(Errc::InvalidArgument, "lattice step must be nonnegative");
  KsResult r;
  r.n = samples.size();
  const double n = static_cast<double>(r.n);
  for (const double s : samples) r.mean += s;
  r.mean /= n;
  double ss = 0.0;
  for (const double s : samples) ss += (s - r.mean) * (s - r.mean);
  r.sd = std::sqrt(ss / (n - 1.0));
  if (!(r.sd > 0.0)) throw Error(Errc::ZeroVariance, "ks test samples have zero variance");

  std::vector<double> x(samples.begin(), samples.end());
  auto cdf = [&](double v) { return normal_cdf((v - r.mean) / r.sd); };
  if (lattice_step == 0.0) {
    r.d = ks_statistic(x, cdf);
  } else {
    // Empirical CDF is a step function on the grid: compare it with the
    // continuity-corrected normal CDF just below and at each grid value.
    std::sort(x.begin(), x.end());
    const double h = lattice_step;
    double d = 0.0;
    std::size_t i = 0;
    while (i < x.size()) {
      std::size_t j = i;
      while (j < x.size() && std::fabs(x[j] - x[i]) < h / 2.0) ++j;
      const double below = static_cast<double>(i) / n;
      const double at = static_cast<double>(j) / n;
      d = std::max({d, std::fabs(below - cdf(x[i] - h / 2.0)), std::fabs(at - cdf(x[i] + h / 2.0))});
      i = j;
    }
    r.d = d;
  }
  r.p = kolmogorov_q(std::sqrt(n) * r.d);
  return r;
}

KsResult ks_test_uniform(std::span<const double> samples) {
  if (samples.size() < 8) throw Error(Errc::TooFewSamples, "ks test needs at least 8 samples");
  KsResult r;
  r.n = samples.size();
  std::vector<double> x(samples.begin(), samples.end());
  r.d = ks_statistic(x, [](double v) { return std::clamp(v, 0.0, 1.0); });
  r.p = kolmogorov_q(std::sqrt(static_cast<double>(r.n)) * r.d);
  return r;
}

}  // namespace iotrng::stats
