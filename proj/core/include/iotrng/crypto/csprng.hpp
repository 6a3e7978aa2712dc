// SPDX-License-Identifier: Apache-2.0
//
// Crypto-secure generator API. Kept apart from the general-purpose API so a
// weak generator can never be handed out where a secure one is required.
#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <variant>

#include "iotrng/crypto/drbg.hpp"
#include "iotrng/descriptor.hpp"
#include "iotrng/seed.hpp"

namespace iotrng::crypto {

enum class CsprngAlgorithm { Sha256Prng, HashDrbg, CtrDrbg, Fortuna };

inline constexpr std::array<CsprngAlgorithm, 4> kAllCsprngAlgorithms = {
    CsprngAlgorithm::Sha256Prng, CsprngAlgorithm::HashDrbg, CsprngAlgorithm::CtrDrbg, CsprngAlgorithm::Fortuna};

inline constexpr unsigned kMinSecurityStrength = 128;

const GeneratorDescriptor& descriptor(CsprngAlgorithm algorithm) noexcept;
unsigned max_strength(CsprngAlgorithm algorithm) noexcept;
/// Throws Error(UnknownAlgorithm) for names outside the crypto set.
CsprngAlgorithm parse_csprng_algorithm(std::string_view name);

enum class ReseedMode { Disabled, OnDemand, Interval };

struct ReseedPolicy {
  ReseedMode mode = ReseedMode::Disabled;
  /// For Interval mode: reseed automatically before every n-th generate call.
  std::uint64_t interval = 0;
  /// Entropy callback used by Interval mode; receives the required bits.
  std::function<SeedMaterial(unsigned bits)> entropy;
};

struct CsprngOptions {
  ProviderPtr provider = builtin_provider();
  ReseedPolicy reseed;
  /// DRBG reseed_interval; generate throws ReseedRequired beyond it.
  std::uint64_t max_requests_between_reseeds = HashDrbg::kMaxReseedInterval;
  Fortuna::Clock::duration fortuna_min_reseed_interval = std::chrono::milliseconds(100);
};

class CsprngInstance {
 public:
  /// Empty instance; every operation throws NotInstantiated.
  CsprngInstance() = default;

  /// Preconditions, checked in this order: strength >= 128 (StrengthTooLow),
  /// strength <= algorithm maximum (StrengthUnsupported), claimed entropy >=
  /// strength (InsufficientEntropy), CTR seed >= 32 bytes (SeedTooShort).
  static CsprngInstance instantiate(CsprngAlgorithm algorithm, const SeedMaterial& seed, unsigned strength_bits,
                                    CsprngOptions options = {});
  /// Same, starting from a descriptor; rejects non crypto-secure classes.
  static CsprngInstance instantiate(const GeneratorDescriptor& descriptor, const SeedMaterial& seed,
                                    unsigned strength_bits, CsprngOptions options = {});

  void generate(std::span<std::uint8_t> out);
  Bytes generate(std::size_t n_bytes);
  std::uint32_t next_u32();

  void reseed(const SeedMaterial& seed);
  void add_random_event(std::uint8_t source_id, ByteView data);

  bool instantiated() const noexcept { return !std::holds_alternative<std::monostate>(impl_); }
  CsprngAlgorithm algorithm() const;
  unsigned strength_bits() const noexcept { return strength_; }
  ReseedMode reseed_mode() const noexcept { return policy_.mode; }

  /// Underlying generator, for inspection in tests and benchmarks.
  template <typename T>
  const T& as() const {
    return std::get<T>(impl_);
  }

 private:
  using Impl = std::variant<std::monostate, Sha256Prng, HashDrbg, CtrDrbg, Fortuna>;

  void require_instantiated() const;
  void reseed_unchecked(const SeedMaterial& seed);

  Impl impl_;
  unsigned strength_ = 0;
  ReseedPolicy policy_;
  std::uint64_t generates_since_reseed_ = 0;
};

}  // namespace iotrng::crypto
