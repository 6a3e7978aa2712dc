// SPDX-License-Identifier: Apache-2.0
//
// Simulated SRAM power-up behaviour. Each cell has a fixed probability of
// powering up as 1, drawn once per device from a three-mode mixture: most
// cells are strongly skewed to 0 or 1, a few are balanced and carry the noise.
#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "iotrng/bytes.hpp"

namespace iotrng::entropy {

struct PufParams {
  std::array<double, 3> modes{0.01, 0.5, 0.99};
  std::array<double, 3> weights{0.48, 0.04, 0.48};
  double sigma_noise = 0.01;
};

/// Persistent seeder cells. They survive a soft reset and are lost on power-off.
struct SeederNvState {
  bool marker_present = false;
  std::uint32_t marker = 0;
  std::uint32_t counter = 0;
  std::uint32_t last_seed = 0;

  bool operator==(const SeederNvState&) const = default;
};

class PufDevice {
 public:
  /// Biases come from (sim_seed, device_id); the per-read noise stream is
  /// separate, so the same device can be re-simulated read for read.
  PufDevice(std::uint32_t device_id, std::size_t size_bytes, std::uint64_t sim_seed, PufParams params = {});

  /// Reads the first n_bytes of SRAM after a power cycle. Bit j of the result
  /// is bit (7 - j % 8) of byte j / 8. Throws ReadWithoutPowerCycle if the
  /// device has not been powered off since the previous read.
  Bytes power_up_read(std::size_t n_bytes);
  Bytes power_up_read() { return power_up_read(size_); }

  /// Cuts power: SRAM contents, including the seeder cells, are lost.
  void power_off();

  std::uint32_t id() const noexcept { return id_; }
  std::size_t size_bytes() const noexcept { return size_; }
  const std::vector<double>& biases() const noexcept { return bias_; }
  bool powered() const noexcept { return powered_; }

  SeederNvState& nv() noexcept { return nv_; }
  const SeederNvState& nv() const noexcept { return nv_; }

  /// Fresh word from the simulation stream, used for markers.
  std::uint32_t random_word() { return static_cast<std::uint32_t>(noise_()); }

 private:
  std::uint32_t id_;
  std::size_t size_;
  std::vector<double> bias_;
  std::mt19937_64 noise_;
  bool powered_ = false;
  SeederNvState nv_;
};

}  // namespace iotrng::entropy
