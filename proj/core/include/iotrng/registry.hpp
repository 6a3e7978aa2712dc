// SPDX-License-Identifier: Apache-2.0
//
// Name-based access to every generator, for the CLI, the benchmark harness
// and the statistical suite. Word streams are serialized little-endian.
#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "iotrng/crypto/csprng.hpp"
#include "iotrng/descriptor.hpp"
#include "iotrng/prng/light.hpp"

namespace iotrng {

class Generator {
 public:
  virtual ~Generator() = default;
  virtual const GeneratorDescriptor& descriptor() const noexcept = 0;
  virtual std::uint32_t next_u32() = 0;

  void fill_words(std::span<std::uint32_t> out);
  /// Successive words, little-endian; a partial last word is truncated.
  void fill_bytes(std::span<std::uint8_t> out);
};

/// All generator names in registry order: general-purpose, reference-weak,
/// then crypto-secure.
std::vector<std::string_view> generator_names();
std::string generator_name_list();

/// Throws UnknownGenerator listing the valid names.
const GeneratorDescriptor& find_descriptor(std::string_view name);

std::unique_ptr<Generator> make_gp_generator(prng::GpVariant variant, std::uint64_t seed);
std::unique_ptr<Generator> make_crypto_generator(crypto::CsprngAlgorithm algorithm, const SeedMaterial& seed,
                                                 unsigned strength_bits = crypto::kMinSecurityStrength,
                                                 crypto::CsprngOptions options = {});

/// General-purpose names take the seed as a 64-bit integer; crypto names go
/// through instantiate with the seed material.
std::unique_ptr<Generator> make_generator(std::string_view name, std::uint64_t gp_seed);
std::unique_ptr<Generator> make_generator(std::string_view name, const SeedMaterial& crypto_seed,
                                          unsigned strength_bits = crypto::kMinSecurityStrength);

}  // namespace iotrng
