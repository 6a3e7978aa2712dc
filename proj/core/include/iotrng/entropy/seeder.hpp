// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "iotrng/entropy/puf.hpp"

namespace iotrng::entropy {

inline constexpr std::size_t kSeederReadBytes = 1024;

struct SeederStartup {
  std::uint32_t seed = 0;
  SeederNvState nv;
  bool cold_boot = false;
};

/// Boot-time seeding. Without a marker (cold boot) the seed is the DEK hash of
/// a power-up read, init = read length, and a fresh marker is written. With a
/// marker (soft reset) the counter is bumped and the seed is the DEK hash of
/// le32(last_seed + counter), init = 4; SRAM is not read.
SeederStartup seeder_startup(PufDevice& device, const SeederNvState& nv, std::size_t read_bytes = kSeederReadBytes);

/// Runs seeder_startup against the device's own persistent cells and stores
/// the result back.
std::uint32_t boot(PufDevice& device, std::size_t read_bytes = kSeederReadBytes);

}  // namespace iotrng::entropy
