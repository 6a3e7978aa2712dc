// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <string>

#include "iotrng/error.hpp"
#include "iotrng/stats/nist.hpp"
#include "iotrng/stats/special.hpp"

namespace iotrng::stats {

namespace {

std::vector<long> partial_sums(Bits bits) {
  if (bits.empty()) throw Error(Errc::SequenceTooShort, "excursion tests need a nonempty sequence");
  std::vector<long> s(bits.size());
  long acc = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    acc += bits[i] ? 1 : -1;
    s[i] = acc;
  }
  return s;
}

double cycle_constraint(std::size_t n) { return std::max(0.005 * std::sqrt(static_cast<double>(n)), 500.0); }

[[noreturn]] void not_applicable(std::size_t j) {
  throw Error(Errc::NotApplicable, "only " + std::to_string(j) + " cycles; at least 500 required");
}

}  // namespace

std::array<double, 8> random_excursions_test(Bits bits) {
  static constexpr double kPi[5][6] = {
      {0.0000000000, 0.00000000000, 0.00000000000, 0.00000000000, 0.00000000000, 0.0000000000},
      {0.5000000000, 0.25000000000, 0.12500000000, 0.06250000000, 0.03125000000, 0.0312500000},
      {0.7500000000, 0.06250000000, 0.04687500000, 0.03515625000, 0.02636718750, 0.0791015625},
      {0.8333333333, 0.02777777778, 0.02314814815, 0.01929012346, 0.01607510288, 0.0803755143},
      {0.8750000000, 0.01562500000, 0.01367187500, 0.01196289063, 0.01046752930, 0.0732727051}};
  static constexpr int kStates[8] = {-4, -3, -2, -1, 1, 2, 3, 4};

  const std::vector<long> s = partial_sums(bits);
  const std::size_t n = bits.size();
  const std::size_t max_cycles = std::max<std::size_t>(1000, n / 100);
  std::vector<std::size_t> cycle(max_cycles + 2, 0);
  std::size_t j = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (s[i] == 0) {
      if (++j > max_cycles) {
        throw Error(Errc::NotApplicable, "more than " + std::to_string(max_cycles) + " cycles");
      }
      cycle[j] = i;
    }
  }
  if (s[n - 1] != 0) ++j;
  cycle[j] = n;
  if (static_cast<double>(j) < cycle_constraint(n)) not_applicable(j);

  std::size_t nu[6][8] = {};
  std::size_t start = 0;
  std::size_t stop = cycle[1];
  for (std::size_t c = 1; c <= j; ++c) {
    std::size_t counter[8] = {};
    for (std::size_t i = start; i < stop; ++i) {
      if (s[i] >= 1 && s[i] <= 4) ++counter[s[i] + 3];
      else if (s[i] >= -4 && s[i] <= -1) ++counter[s[i] + 4];
    }
    start = cycle[c] + 1;
    if (c < j) stop = cycle[c + 1];
    for (std::size_t x = 0; x < 8; ++x) ++nu[std::min<std::size_t>(counter[x], 5)][x];
  }

  std::array<double, 8> p{};
  const double jd = static_cast<double>(j);
  for (std::size_t x = 0; x < 8; ++x) {
    const auto& pi = kPi[std::abs(kStates[x])];
    double chi2 = 0.0;
    for (std::size_t k = 0; k < 6; ++k) chi2 += std::pow(static_cast<double>(nu[k][x]) - jd * pi[k], 2) / (jd * pi[k]);
    p[x] = igamc(2.5, chi2 / 2.0);
  }
  return p;
}

std::array<double, 18> random_excursions_variant_test(Bits bits) {
  const std::vector<long> s = partial_sums(bits);
  const std::size_t n = bits.size();
  std::size_t j = 0;
  std::size_t counts[19] = {};  // index x + 9
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && s[i] == 0) ++j;
    if (s[i] >= -9 && s[i] <= 9) ++counts[s[i] + 9];
  }
  if (s[n - 1] != 0) ++j;
  if (static_cast<double>(j) < static_cast<double>(static_cast<long>(cycle_constraint(n)))) not_applicable(j);

  std::array<double, 18> p{};
  const double jd = static_cast<double>(j);
  std::size_t idx = 0;
  for (int x = -9; x <= 9; ++x) {
    if (x == 0) continue;
    const double count = static_cast<double>(counts[x + 9]);
    p[idx++] = erfc(std::fabs(count - jd) / std::sqrt(2.0 * jd * (4.0 * std::abs(x) - 2.0)));
  }
  return p;
}

}  // namespace iotrng::stats
