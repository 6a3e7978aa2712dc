// SPDX-License-Identifier: Apache-2.0
#include "iotrng/entropy/puf.hpp"

#include <algorithm>
#include <string>

#include "iotrng/error.hpp"
#include "iotrng/prng/light.hpp"

namespace iotrng::entropy {

namespace {

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

PufDevice::PufDevice(std::uint32_t device_id, std::size_t size_bytes, std::uint64_t sim_seed, PufParams params)
    : id_(device_id), size_(size_bytes), bias_(8 * size_bytes) {
  if (size_ == 0) throw Error(Errc::InvalidArgument, "device needs at least one byte of SRAM");
  double total = 0.0;
  for (const double w : params.weights) {
    if (w < 0.0) throw Error(Errc::InvalidArgument, "mixture weights must be nonnegative");
    total += w;
  }
  if (total <= 0.0) throw Error(Errc::InvalidArgument, "mixture weights sum to zero");
  if (params.sigma_noise < 0.0) throw Error(Errc::InvalidArgument, "sigma_noise must be nonnegative");

  std::uint64_t mix = sim_seed ^ (0xD1B54A32D192ED03ULL * (static_cast<std::uint64_t>(device_id) + 1));
  std::mt19937_64 cells(prng::splitmix64(mix));
  noise_.seed(prng::splitmix64(mix));
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (double& b : bias_) {
    const double u = unit(cells) * total;
    std::size_t k = 0;
    double acc = params.weights[0];
    while (k + 1 < params.modes.size() && u >= acc) acc += params.weights[++k];
    b = std::clamp(params.modes[k] + params.sigma_noise * gauss(cells), 0.0, 1.0);
  }
}

Bytes PufDevice::power_up_read(std::size_t n_bytes) {
  if (powered_) throw Error(Errc::ReadWithoutPowerCycle, "device " + std::to_string(id_) + " was not power-cycled");
  if (n_bytes > size_) {
    throw Error(Errc::InvalidArgument, "read of " + std::to_string(n_bytes) + " bytes exceeds " +
                                           std::to_string(size_) + " bytes of SRAM");
  }
  powered_ = true;
  Bytes out(n_bytes, 0);
  for (std::size_t i = 0; i < 8 * n_bytes; ++i) {
    if (unit(noise_) < bias_[i]) out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
  }
  return out;
}

void PufDevice::power_off() {
  powered_ = false;
  nv_ = SeederNvState{};
  nv_.marker = random_word();
}

}  // namespace iotrng::entropy
