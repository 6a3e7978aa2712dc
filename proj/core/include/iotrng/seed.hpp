// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "iotrng/bytes.hpp"
#include "iotrng/error.hpp"

namespace iotrng {

/// Seed bytes plus the number of entropy bits their producer vouches for.
/// The unit of exchange between entropy sources and generators.
class SeedMaterial {
 public:
  SeedMaterial() = default;
  SeedMaterial(Bytes bytes, unsigned claimed_entropy_bits) : bytes_(std::move(bytes)), claimed_bits_(claimed_entropy_bits) {
    if (claimed_bits_ > 8 * bytes_.size()) {
      throw Error(Errc::InvalidClaim, "claimed " + std::to_string(claimed_bits_) + " entropy bits in " +
                                          std::to_string(bytes_.size()) + " bytes");
    }
  }
  SeedMaterial(const SeedMaterial&) = default;
  SeedMaterial& operator=(const SeedMaterial&) = default;
  SeedMaterial(SeedMaterial&&) noexcept = default;
  SeedMaterial& operator=(SeedMaterial&&) noexcept = default;
  ~SeedMaterial() { secure_zero(bytes_); }

  /// Full-entropy seed: every byte is claimed to carry 8 bits.
  static SeedMaterial full_entropy(Bytes bytes) {
    const auto bits = static_cast<unsigned>(8 * bytes.size());
    return SeedMaterial(std::move(bytes), bits);
  }

  const Bytes& bytes() const noexcept { return bytes_; }
  unsigned claimed_entropy_bits() const noexcept { return claimed_bits_; }

 private:
  Bytes bytes_;
  unsigned claimed_bits_ = 0;
};

}  // namespace iotrng
