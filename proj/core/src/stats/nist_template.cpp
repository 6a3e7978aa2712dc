// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "iotrng/error.hpp"
#include "iotrng/stats/nist.hpp"
#include "iotrng/stats/special.hpp"

namespace iotrng::stats {

namespace {

/// Window value of bits[i .. i+m), first bit most significant.
std::vector<std::uint32_t> windows(Bits bits, std::size_t begin, std::size_t count, unsigned m) {
  std::vector<std::uint32_t> w(count);
  const std::uint32_t mask = (m == 32) ? 0xFFFFFFFFu : ((1u << m) - 1);
  std::uint32_t v = 0;
  for (unsigned k = 0; k + 1 < m; ++k) v = (v << 1) | bits[begin + k];
  for (std::size_t i = 0; i < count; ++i) {
    v = ((v << 1) | bits[begin + i + m - 1]) & mask;
    w[i] = v;
  }
  return w;
}

}  // namespace

std::vector<std::uint32_t> aperiodic_templates(unsigned m) {
  if (m < 2 || m > 21) throw Error(Errc::InvalidArgument, "template length must be in [2, 21]");
  static std::mutex mutex;
  static std::map<unsigned, std::vector<std::uint32_t>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(m); it != cache.end()) return it->second;

  std::vector<std::uint32_t> out;
  for (std::uint32_t t = 0; t < (1u << m); ++t) {
    bool bordered = false;
    for (unsigned s = 1; s < m && !bordered; ++s) {
      // Prefix of length m-s against suffix of length m-s.
      const std::uint32_t prefix = t >> s;
      const std::uint32_t suffix = t & ((1u << (m - s)) - 1);
      bordered = prefix == suffix;
    }
    if (!bordered) out.push_back(t);
  }
  cache.emplace(m, out);
  return out;
}

std::vector<double> non_overlapping_template_test(Bits bits, unsigned m) {
  constexpr std::size_t kBlocks = 8;
  const std::vector<std::uint32_t> templates = aperiodic_templates(m);
  const std::size_t block = bits.size() / kBlocks;
  if (block < 2 * static_cast<std::size_t>(m)) {
    throw Error(Errc::SequenceTooShort, "non-overlapping template test needs blocks longer than 2m bits");
  }
  const double md = static_cast<double>(m);
  const double lambda = static_cast<double>(block - m + 1) / std::pow(2.0, md);
  const double var = static_cast<double>(block) * (1.0 / std::pow(2.0, md) - (2.0 * md - 1.0) / std::pow(2.0, 2.0 * md));

  const std::size_t n_values = std::size_t{1} << m;
  const std::size_t n_windows = block - m + 1;
  // W[t][i]: matches of template t in block i.
  std::vector<std::array<std::size_t, kBlocks>> w(templates.size());
  std::vector<std::size_t> start(n_values + 1);
  std::vector<std::uint32_t> positions(n_windows);
  for (std::size_t i = 0; i < kBlocks; ++i) {
    const std::vector<std::uint32_t> win = windows(bits, i * block, n_windows, m);
    // Bucket window positions by value, ascending within each bucket.
    std::fill(start.begin(), start.end(), 0);
    for (const std::uint32_t v : win) ++start[v + 1];
    for (std::size_t v = 0; v < n_values; ++v) start[v + 1] += start[v];
    std::vector<std::size_t> fill(start.begin(), start.end() - 1);
    for (std::size_t j = 0; j < n_windows; ++j) positions[fill[win[j]]++] = static_cast<std::uint32_t>(j);

    for (std::size_t t = 0; t < templates.size(); ++t) {
      std::size_t count = 0;
      std::size_t next_free = 0;
      for (std::size_t k = start[templates[t]]; k < start[templates[t] + 1]; ++k) {
        if (positions[k] >= next_free) {
          ++count;
          next_free = positions[k] + m;
        }
      }
      w[t][i] = count;
    }
  }

  std::vector<double> p(templates.size());
  for (std::size_t t = 0; t < templates.size(); ++t) {
    double chi2 = 0.0;
    for (std::size_t i = 0; i < kBlocks; ++i) chi2 += std::pow((static_cast<double>(w[t][i]) - lambda) / std::pow(var, 0.5), 2);
    p[t] = igamc(kBlocks / 2.0, chi2 / 2.0);
  }
  return p;
}

double overlapping_template_test(Bits bits, unsigned m) {
  constexpr std::size_t kBlock = 1032;
  constexpr std::size_t kK = 5;
  if (m < 2 || m > 20) throw Error(Errc::InvalidArgument, "template length must be in [2, 20]");
  const std::size_t n_blocks = bits.size() / kBlock;
  if (n_blocks == 0) throw Error(Errc::SequenceTooShort, "overlapping template test needs at least 1032 bits");

  const double lambda = static_cast<double>(kBlock - m + 1) / std::pow(2.0, m);
  const double eta = lambda / 2.0;
  double pi[kK + 1];
  double sum = 0.0;
  for (std::size_t u = 0; u < kK; ++u) {
    double p;
    if (u == 0) {
      p = std::exp(-eta);
    } else {
      p = 0.0;
      const double ud = static_cast<double>(u);
      for (std::size_t l = 1; l <= u; ++l) {
        const double ld = static_cast<double>(l);
        p += std::exp(-eta - ud * std::log(2.0) + ld * std::log(eta) - std::lgamma(ld + 1) + std::lgamma(ud) -
                      std::lgamma(ld) - std::lgamma(ud - ld + 1));
      }
    }
    pi[u] = p;
    sum += p;
  }
  pi[kK] = 1.0 - sum;

  std::size_t nu[kK + 1] = {};
  for (std::size_t i = 0; i < n_blocks; ++i) {
    std::size_t count = 0;
    std::size_t run = 0;  // trailing ones ending at the current bit
    for (std::size_t j = 0; j < kBlock; ++j) {
      run = bits[i * kBlock + j] ? run + 1 : 0;
      if (run >= m) ++count;
    }
    ++nu[std::min(count, kK)];
  }
  double chi2 = 0.0;
  const double n = static_cast<double>(n_blocks);
  for (std::size_t i = 0; i <= kK; ++i) chi2 += std::pow(static_cast<double>(nu[i]) - n * pi[i], 2) / (n * pi[i]);
  return igamc(kK / 2.0, chi2 / 2.0);
}

}  // namespace iotrng::stats
