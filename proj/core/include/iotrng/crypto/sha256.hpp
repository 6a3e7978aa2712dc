// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>

#include "iotrng/bytes.hpp"

namespace iotrng::crypto {

using Digest = std::array<std::uint8_t, 32>;

/// Portable FIPS 180-4 SHA-256.
class Sha256 {
 public:
  Sha256() noexcept { reset(); }

  void reset() noexcept;
  void update(ByteView data) noexcept;
  Digest finish() noexcept;

  static Digest hash(ByteView data) noexcept {
    Sha256 h;
    h.update(data);
    return h.finish();
  }

 private:
  void compress(const std::uint8_t* block) noexcept;

  std::array<std::uint32_t, 8> h_{};
  std::array<std::uint8_t, 64> buffer_{};
  std::uint64_t total_bytes_ = 0;
  std::size_t buffered_ = 0;
};

}  // namespace iotrng::crypto
