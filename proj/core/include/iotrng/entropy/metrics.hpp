// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "iotrng/bytes.hpp"

namespace iotrng::entropy {

struct MinEntropy {
  double relative = 0.0;    // mean per-bit min-entropy, in [0, 1]
  double total_bits = 0.0;  // sum over bit positions
};

/// Per-bit most-common-value estimate over R reads of B bits each. Bit j of a
/// read is bit (7 - j % 8) of byte j / 8. Throws TooFewSamples for R < 2 and
/// DimensionMismatch for reads of unequal length.
MinEntropy min_entropy_per_bit(std::span<const Bytes> reads);

/// Same estimate over 32-bit words (e.g. seeds), one bit position per bit.
MinEntropy min_entropy_per_bit(std::span<const std::uint32_t> words);

/// Fraction of one bits.
double hamming_weight(ByteView bits);
/// Fraction of differing bit positions; throws LengthMismatch.
double hamming_distance(ByteView a, ByteView b);
double hamming_distance(std::uint32_t a, std::uint32_t b) noexcept;

}  // namespace iotrng::entropy
