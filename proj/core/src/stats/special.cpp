// SPDX-License-Identifier: Apache-2.0
#include "iotrng/stats/special.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "iotrng/error.hpp"

namespace iotrng::stats {

double igamc(double a, double x) {
  if (!(a > 0.0) || !(x >= 0.0)) throw Error(Errc::InvalidArgument, "igamc needs a > 0 and x >= 0");
  return boost::math::gamma_q(a, x);
}

double igam(double a, double x) {
  if (!(a > 0.0) || !(x >= 0.0)) throw Error(Errc::InvalidArgument, "igam needs a > 0 and x >= 0");
  return boost::math::gamma_p(a, x);
}

double erfc(double x) noexcept { return std::erfc(x); }

double normal_cdf(double x) noexcept { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double kolmogorov_q(double lambda) noexcept {
  if (lambda <= 0.0) return 1.0;
  if (lambda < 1.18) {
    // Theta-function form converges fast for small lambda:
    // P = sqrt(2 pi)/lambda * sum_k exp(-(2k-1)^2 pi^2 / (8 lambda^2)).
    const double w = std::numbers::pi * std::numbers::pi / (8.0 * lambda * lambda);
    double sum = 0.0;
    for (int k = 1; k <= 20; ++k) {
      const double t = std::exp(-(2.0 * k - 1.0) * (2.0 * k - 1.0) * w);
      sum += t;
      if (t < 1e-17 * sum) break;
    }
    return std::clamp(1.0 - std::sqrt(2.0 * std::numbers::pi) / lambda * sum, 0.0, 1.0);
  }
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 100; ++k) {
    const double t = std::exp(-2.0 * k * k * lambda * lambda);
    sum += sign * t;
    if (t < 1e-17) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

}  // namespace iotrng::stats
