// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "iotrng/bytes.hpp"

namespace iotrng::entropy {

/// Knuth's DEK fold: h = ((h << 5) ^ (h >> 27)) ^ byte, starting from init.
/// Folding a||b equals folding b with the result of a as init.
std::uint32_t dek_hash(ByteView data, std::uint32_t init) noexcept;

}  // namespace iotrng::entropy
