// SPDX-License-Identifier: Apache-2.0
#include "iotrng/entropy/seeder.hpp"

#include "iotrng/entropy/dek_hash.hpp"

namespace iotrng::entropy {

SeederStartup seeder_startup(PufDevice& device, const SeederNvState& nv, std::size_t read_bytes) {
  SeederStartup out;
  out.nv = nv;
  if (!nv.marker_present) {
    const Bytes read = device.power_up_read(read_bytes);
    out.seed = dek_hash(read, static_cast<std::uint32_t>(read.size()));
    out.cold_boot = true;
    out.nv.marker_present = true;
    out.nv.marker = device.random_word();
    out.nv.counter = 0;
  } else {
    out.nv.counter = nv.counter + 1;
    std::uint8_t buf[4];
    store_le32(buf, nv.last_seed + out.nv.counter);
    out.seed = dek_hash(buf, 4);
  }
  out.nv.last_seed = out.seed;
  return out;
}

std::uint32_t boot(PufDevice& device, std::size_t read_bytes) {
  const SeederStartup s = seeder_startup(device, device.nv(), read_bytes);
  device.nv() = s.nv;
  return s.seed;
}

}  // namespace iotrng::entropy
