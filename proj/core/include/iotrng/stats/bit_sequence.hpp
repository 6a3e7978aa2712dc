// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "iotrng/bytes.hpp"

namespace iotrng::stats {

/// Unpacked view used by the test functions: one element per bit, 0 or 1.
using Bits = std::span<const std::uint8_t>;

/// Packed bit string. Expansion order: bytes in stream order, most
/// significant bit first within each byte. 32-bit words enter as their
/// little-endian byte serialization.
class BitSequence {
 public:
  BitSequence() = default;

  static BitSequence from_bytes(ByteView bytes);
  /// First n_bits of the byte expansion; throws SequenceTooShort if the bytes
  /// hold fewer.
  static BitSequence from_bytes(ByteView bytes, std::size_t n_bits);
  static BitSequence from_words_le(std::span<const std::uint32_t> words);
  /// '0' and '1' characters; whitespace is skipped, anything else throws
  /// InvalidArgument.
  static BitSequence from_ascii(std::string_view text);
  /// One element per bit; values other than 0/1 throw InvalidArgument.
  static BitSequence from_bits(Bits bits);

  std::size_t size() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }
  unsigned operator[](std::size_t i) const noexcept { return (packed_[i >> 3] >> (7 - (i & 7))) & 1u; }

  const Bytes& packed() const noexcept { return packed_; }
  std::vector<std::uint8_t> unpack() const;
  std::size_t count_ones() const noexcept;

 private:
  Bytes packed_;
  std::size_t n_ = 0;
};

}  // namespace iotrng::stats
