// SPDX-License-Identifier: Apache-2.0
#include "iotrng/stats/bit_sequence.hpp"

#include <bit>
#include <string>

#include "iotrng/error.hpp"

namespace iotrng::stats {

BitSequence BitSequence::from_bytes(ByteView bytes) {
  BitSequence s;
  s.packed_.assign(bytes.begin(), bytes.end());
  s.n_ = 8 * bytes.size();
  return s;
}

BitSequence BitSequence::from_bytes(ByteView bytes, std::size_t n_bits) {
  if (n_bits > 8 * bytes.size()) {
    throw Error(Errc::SequenceTooShort,
                std::to_string(bytes.size()) + " bytes cannot supply " + std::to_string(n_bits) + " bits");
  }
  BitSequence s;
  s.packed_.assign(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>((n_bits + 7) / 8));
  if (n_bits % 8 != 0) s.packed_.back() &= static_cast<std::uint8_t>(0xFF00u >> (n_bits % 8));
  s.n_ = n_bits;
  return s;
}

BitSequence BitSequence::from_words_le(std::span<const std::uint32_t> words) {
  BitSequence s;
  s.packed_.resize(4 * words.size());
  for (std::size_t i = 0; i < words.size(); ++i) store_le32(s.packed_.data() + 4 * i, words[i]);
  s.n_ = 32 * words.size();
  return s;
}

BitSequence BitSequence::from_ascii(std::string_view text) {
  BitSequence s;
  s.packed_.reserve(text.size() / 8 + 1);
  for (const char c : text) {
    if (c == ' ' || c == '\n' || c == '\r' || c == '\t') continue;
    if (c != '0' && c != '1') {
      throw Error(Errc::InvalidArgument, std::string("unexpected character '") + c + "' in bit stream");
    }
    if (s.n_ % 8 == 0) s.packed_.push_back(0);
    if (c == '1') s.packed_.back() |= static_cast<std::uint8_t>(0x80u >> (s.n_ % 8));
    ++s.n_;
  }
  return s;
}

BitSequence BitSequence::from_bits(Bits bits) {
  BitSequence s;
  s.packed_.assign((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1) throw Error(Errc::InvalidArgument, "bit values must be 0 or 1");
    if (bits[i]) s.packed_[i >> 3] |= static_cast<std::uint8_t>(0x80u >> (i & 7));
  }
  s.n_ = bits.size();
  return s;
}

std::vector<std::uint8_t> BitSequence::unpack() const {
  std::vector<std::uint8_t> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = static_cast<std::uint8_t>((*this)[i]);
  return out;
}

std::size_t BitSequence::count_ones() const noexcept {
  std::size_t n = 0;
  for (const std::uint8_t b : packed_) n += static_cast<std::size_t>(std::popcount(b));
  return n;
}

}  // namespace iotrng::stats
