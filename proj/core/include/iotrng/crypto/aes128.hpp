// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>

namespace iotrng::crypto {

using AesKey = std::array<std::uint8_t, 16>;
using AesBlock = std::array<std::uint8_t, 16>;

/// FIPS 197 AES-128, encryption direction only. Construction expands the key.
class Aes128 {
 public:
  explicit Aes128(const AesKey& key) noexcept;
  Aes128(const Aes128&) = default;
  Aes128& operator=(const Aes128&) = default;
  ~Aes128();

  AesBlock encrypt(const AesBlock& in) const noexcept;

 private:
  std::array<std::uint32_t, 44> round_keys_{};
};

}  // namespace iotrng::crypto
