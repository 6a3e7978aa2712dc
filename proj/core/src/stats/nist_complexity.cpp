// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "iotrng/error.hpp"
#include "iotrng/stats/nist.hpp"
#include "iotrng/stats/special.hpp"

namespace iotrng::stats {

namespace {

/// Counts of all cyclic m-bit windows (the sequence wraps around).
std::vector<std::uint32_t> cyclic_counts(Bits bits, unsigned m) {
  std::vector<std::uint32_t> counts(std::size_t{1} << m, 0);
  if (m == 0) {
    counts[0] = static_cast<std::uint32_t>(bits.size());
    return counts;
  }
  const std::size_t n = bits.size();
  const std::uint32_t mask = static_cast<std::uint32_t>((std::uint64_t{1} << m) - 1);
  std::uint32_t v = 0;
  for (unsigned k = 0; k + 1 < m; ++k) v = (v << 1) | bits[k % n];
  for (std::size_t i = 0; i < n; ++i) {
    v = ((v << 1) | bits[(i + m - 1) % n]) & mask;
    ++counts[v];
  }
  return counts;
}

double psi2(Bits bits, int m) {
  if (m <= 0) return 0.0;
  const auto counts = cyclic_counts(bits, static_cast<unsigned>(m));
  double sum = 0.0;
  for (const std::uint32_t c : counts) sum += std::pow(static_cast<double>(c), 2);
  const double n = static_cast<double>(bits.size());
  return sum * std::pow(2.0, m) / n - n;
}

}  // namespace

double universal_test(Bits bits) {
  static constexpr double kExpected[17] = {0, 0, 0, 0, 0, 0, 5.2177052, 6.1962507, 7.1836656,
                                           8.1764248, 9.1723243, 10.170032, 11.168765, 12.168070, 13.167693,
                                           14.167488, 15.167379};
  static constexpr double kVariance[17] = {0,     0,     0,     0,     0,     0,     2.954, 3.125, 3.238,
                                           3.311, 3.356, 3.384, 3.401, 3.410, 3.416, 3.419, 3.421};
  static constexpr std::size_t kThresholds[] = {387840,   904960,    2068480,   4654080,   10342400,   22753280,
                                                49643520, 107560960, 231669760, 496435200, 1059061760};
  const std::size_t n = bits.size();
  std::size_t l = 5;
  for (std::size_t i = 0; i < std::size(kThresholds); ++i) {
    if (n >= kThresholds[i]) l = 6 + i;
  }
  if (l < 6) throw Error(Errc::SequenceTooShort, "universal test needs at least 387840 bits, got " + std::to_string(n));

  const std::size_t p = std::size_t{1} << l;
  const std::size_t q = 10 * p;
  const std::size_t k = n / l - q;
  const double ld = static_cast<double>(l);
  const double c = 0.7 - 0.8 / ld + (4.0 + 32.0 / ld) * std::pow(static_cast<double>(k), -3.0 / ld) / 15.0;
  const double sigma = c * std::sqrt(kVariance[l] / static_cast<double>(k));

  std::vector<std::size_t> table(p, 0);
  auto block_value = [&](std::size_t i) {
    std::size_t v = 0;
    for (std::size_t j = 0; j < l; ++j) v = (v << 1) | bits[(i - 1) * l + j];
    return v;
  };
  for (std::size_t i = 1; i <= q; ++i) table[block_value(i)] = i;
  double sum = 0.0;
  for (std::size_t i = q + 1; i <= q + k; ++i) {
    const std::size_t v = block_value(i);
    sum += std::log(static_cast<double>(i - table[v])) / std::log(2.0);
    table[v] = i;
  }
  const double phi = sum / static_cast<double>(k);
  const double arg = std::fabs(phi - kExpected[l]) / (std::sqrt(2.0) * sigma);
  return erfc(arg);
}

double approximate_entropy_test(Bits bits, unsigned m) {
  if (m > 24) throw Error(Errc::InvalidArgument, "approximate entropy block length must be at most 24");
  if (bits.size() < std::max<std::size_t>(100, m + 1)) {
    throw Error(Errc::SequenceTooShort, "approximate entropy test needs at least 100 bits");
  }
  const double n = static_cast<double>(bits.size());
  double ap_en[2];
  for (unsigned r = 0; r < 2; ++r) {
    const unsigned block = m + r;
    if (block == 0) {
      ap_en[r] = 0.0;
      continue;
    }
    const auto counts = cyclic_counts(bits, block);
    double sum = 0.0;
    for (const std::uint32_t c : counts) {
      if (c > 0) sum += c * std::log(c / n);
    }
    ap_en[r] = sum / n;
  }
  const double apen = ap_en[0] - ap_en[1];
  const double chi2 = 2.0 * n * (std::log(2.0) - apen);
  return igamc(std::pow(2.0, static_cast<double>(m) - 1.0), chi2 / 2.0);
}

std::array<double, 2> serial_test(Bits bits, unsigned m) {
  if (m < 2 || m > 24) throw Error(Errc::InvalidArgument, "serial block length must be in [2, 24]");
  if (bits.size() < std::max<std::size_t>(100, m)) throw Error(Errc::SequenceTooShort, "serial test needs at least 100 bits");
  const int mi = static_cast<int>(m);
  const double psim0 = psi2(bits, mi);
  const double psim1 = psi2(bits, mi - 1);
  const double psim2 = psi2(bits, mi - 2);
  const double del1 = psim0 - psim1;
  const double del2 = psim0 - 2.0 * psim1 + psim2;
  return {igamc(std::pow(2.0, mi - 1) / 2.0, del1 / 2.0), igamc(std::pow(2.0, mi - 2) / 2.0, del2 / 2.0)};
}

std::size_t linear_complexity(Bits bits) {
  // Berlekamp-Massey over GF(2) with bit-packed polynomials. recent holds
  // s[n], s[n-1], ... at bit positions 0, 1, ... so the discrepancy is the
  // parity of (C & recent).
  const std::size_t len = bits.size();
  const std::size_t words = len / 64 + 2;
  std::vector<std::uint64_t> c(words, 0), b(words, 0), t(words), recent(words, 0);
  c[0] = b[0] = 1;
  std::size_t l = 0;
  std::size_t last = 0;  // position of the last length change, plus one
  bool have_last = false;

  for (std::size_t n = 0; n < len; ++n) {
    for (std::size_t w = words - 1; w > 0; --w) recent[w] = (recent[w] << 1) | (recent[w - 1] >> 63);
    recent[0] = (recent[0] << 1) | bits[n];

    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words; ++w) acc ^= c[w] & recent[w];
    if (!(std::popcount(acc) & 1)) continue;

    // C ^= B * x^(n - m), m being the last length-change step (-1 initially).
    const std::size_t shift = have_last ? n - last : n + 1;
    t = c;
    const std::size_t ws = shift / 64;
    const unsigned bs = static_cast<unsigned>(shift % 64);
    for (std::size_t w = words; w-- > ws;) {
      std::uint64_t v = b[w - ws] << bs;
      if (bs != 0 && w > ws) v |= b[w - ws - 1] >> (64 - bs);
      c[w] ^= v;
    }
    if (2 * l <= n) {
      l = n + 1 - l;
      last = n;
      have_last = true;
      b = t;
    }
  }
  return l;
}

double linear_complexity_test(Bits bits, std::size_t m) {
  constexpr std::size_t kK = 6;
  static constexpr double kPi[kK + 1] = {0.01047, 0.03125, 0.12500, 0.50000, 0.25000, 0.06250, 0.020833};
  if (m < 2) throw Error(Errc::InvalidArgument, "linear complexity block length must be at least 2");
  const std::size_t n_blocks = bits.size() / m;
  if (n_blocks == 0) throw Error(Errc::SequenceTooShort, "linear complexity test needs at least one block");

  const double md = static_cast<double>(m);
  // Sign convention follows the reference suite.
  const double sign = ((m + 1) % 2 == 0) ? -1.0 : 1.0;
  const double mean = md / 2.0 + (9.0 + sign) / 36.0 - 1.0 / std::pow(2.0, md) * (md / 3.0 + 2.0 / 9.0);

  std::size_t nu[kK + 1] = {};
  for (std::size_t i = 0; i < n_blocks; ++i) {
    const double l = static_cast<double>(linear_complexity(bits.subspan(i * m, m)));
    const double t = sign * (l - mean) + 2.0 / 9.0;
    if (t <= -2.5) ++nu[0];
    else if (t <= -1.5) ++nu[1];
    else if (t <= -0.5) ++nu[2];
    else if (t <= 0.5) ++nu[3];
    else if (t <= 1.5) ++nu[4];
    else if (t <= 2.5) ++nu[5];
    else ++nu[6];
  }
  double chi2 = 0.0;
  const double n = static_cast<double>(n_blocks);
  for (std::size_t i = 0; i <= kK; ++i) chi2 += std::pow(static_cast<double>(nu[i]) - n * kPi[i], 2) / (n * kPi[i]);
  return igamc(kK / 2.0, chi2 / 2.0);
}

}  // namespace iotrng::stats
