// SPDX-License-Identifier: Apache-2.0
#include "iotrng/entropy/dek_hash.hpp"

namespace iotrng::entropy {

std::uint32_t dek_hash(ByteView data, std::uint32_t init) noexcept {
  std::uint32_t h = init;
  for (const std::uint8_t b : data) h = ((h << 5) ^ (h >> 27)) ^ b;
  return h;
}

}  // namespace iotrng::entropy
