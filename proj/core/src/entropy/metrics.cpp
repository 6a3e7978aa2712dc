// SPDX-License-Identifier: Apache-2.0
#include "iotrng/entropy/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "iotrng/error.hpp"

namespace iotrng::entropy {

namespace {

MinEntropy from_counts(const std::vector<std::size_t>& ones, std::size_t rows) {
  MinEntropy out;
  for (const std::size_t c : ones) {
    const double p_max = static_cast<double>(std::max(c, rows - c)) / static_cast<double>(rows);
    out.total_bits += -std::log2(p_max);
  }
  // -log2(1) is -0.0; keep the sign tidy for reports.
  out.total_bits = std::max(0.0, out.total_bits);
  out.relative = ones.empty() ? 0.0 : out.total_bits / static_cast<double>(ones.size());
  return out;
}

}  // namespace

MinEntropy min_entropy_per_bit(std::span<const Bytes> reads) {
  if (reads.size() < 2) throw Error(Errc::TooFewSamples, "min-entropy needs at least two reads");
  const std::size_t len = reads.front().size();
  std::vector<std::size_t> ones(8 * len, 0);
  for (const Bytes& r : reads) {
    if (r.size() != len) {
      throw Error(Errc::DimensionMismatch,
                  "read of " + std::to_string(r.size()) + " bytes, expected " + std::to_string(len));
    }
    for (std::size_t i = 0; i < len; ++i) {
      for (int b = 0; b < 8; ++b) ones[8 * i + b] += (r[i] >> (7 - b)) & 1u;
    }
  }
  return from_counts(ones, reads.size());
}

MinEntropy min_entropy_per_bit(std::span<const std::uint32_t> words) {
  if (words.size() < 2) throw Error(Errc::TooFewSamples, "min-entropy needs at least two samples");
  std::vector<std::size_t> ones(32, 0);
  for (const std::uint32_t w : words) {
    for (int b = 0; b < 32; ++b) ones[b] += (w >> (31 - b)) & 1u;
  }
  return from_counts(ones, words.size());
}

double hamming_weight(ByteView bits) {
  if (bits.empty()) throw Error(Errc::InvalidArgument, "hamming weight of an empty string");
  std::size_t n = 0;
  for (const std::uint8_t b : bits) n += static_cast<std::size_t>(std::popcount(b));
  return static_cast<double>(n) / (8.0 * static_cast<double>(bits.size()));
}

double hamming_distance(ByteView a, ByteView b) {
  if (a.size() != b.size()) {
    throw Error(Errc::LengthMismatch, "hamming distance of " + std::to_string(a.size()) + " and " +
                                          std::to_string(b.size()) + " bytes");
  }
  if (a.empty()) throw Error(Errc::InvalidArgument, "hamming distance of empty strings");
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += static_cast<std::size_t>(std::popcount(static_cast<std::uint8_t>(a[i] ^ b[i])));
  return static_cast<double>(n) / (8.0 * static_cast<double>(a.size()));
}

double hamming_distance(std::uint32_t a, std::uint32_t b) noexcept {
  return std::popcount(a ^ b) / 32.0;
}

}  // namespace iotrng::entropy
