// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace iotrng::stats {

/// Upper regularized incomplete gamma Q(a, x).
double igamc(double a, double x);
/// Lower regularized incomplete gamma P(a, x).
double igam(double a, double x);
double erfc(double x) noexcept;
/// Standard normal CDF.
double normal_cdf(double x) noexcept;
/// Survival function of the asymptotic Kolmogorov distribution,
/// Q(lambda) = 2 sum_{k>=1} (-1)^(k-1) exp(-2 k^2 lambda^2).
double kolmogorov_q(double lambda) noexcept;

}  // namespace iotrng::stats
