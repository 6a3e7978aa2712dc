// SPDX-License-Identifier: Apache-2.0
//
// Deterministic random bit generators over a CryptoProvider:
//   Sha256Prng - FIPS 186-1 style hash generator with a 32-byte output cache
//   HashDrbg   - SP 800-90A Hash_DRBG, SHA-256, seedlen 440
//   CtrDrbg    - SP 800-90A CTR_DRBG, AES-128, no derivation function
//   Fortuna    - Ferguson-Schneier generator with 32 entropy pools, AES-128
//
// These classes carry no policy (strength, reseed schedule); CsprngInstance in
// csprng.hpp wraps them with the checks applications should go through.
#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <memory>
#include <span>

#include "iotrng/bytes.hpp"
#include "iotrng/crypto/provider.hpp"

namespace iotrng::crypto {

using ProviderPtr = std::shared_ptr<const CryptoProvider>;

class Sha256Prng {
 public:
  Sha256Prng(ProviderPtr provider, ByteView seed);

  void generate(std::span<std::uint8_t> out);
  /// state <- sha256(state || seed); discards cached output.
  void reseed(ByteView seed);

  const Digest& state() const noexcept { return state_; }
  std::size_t cached_bytes() const noexcept { return cache_.size() - cache_pos_; }
  std::size_t cached_words() const noexcept { return cached_bytes() / 4; }
  std::uint64_t hash_calls() const noexcept { return hash_calls_; }

  /// state' = (state + output + 1) mod 2^256, big-endian arithmetic.
  static Digest advance(const Digest& state, const Digest& output) noexcept;

 private:
  void refill();

  ProviderPtr provider_;
  Digest state_{};
  Digest cache_{};
  std::size_t cache_pos_ = 32;
  std::uint64_t hash_calls_ = 0;
};

class HashDrbg {
 public:
  static constexpr std::size_t kSeedLen = 55;               // 440 bits
  static constexpr std::size_t kMaxRequestBytes = 1 << 16;  // 2^19 bits
  static constexpr std::uint64_t kMaxReseedInterval = 1ULL << 48;
  using Value = std::array<std::uint8_t, kSeedLen>;

  HashDrbg(ProviderPtr provider, ByteView entropy, ByteView nonce, ByteView personalization,
           std::uint64_t reseed_interval = kMaxReseedInterval);

  void reseed(ByteView entropy, ByteView additional = {});
  /// Throws ReseedRequired once the reseed counter passes the interval.
  void generate(std::span<std::uint8_t> out, ByteView additional = {});

  const Value& v() const noexcept { return v_; }
  const Value& c() const noexcept { return c_; }
  std::uint64_t reseed_counter() const noexcept { return reseed_counter_; }
  bool reseed_due() const noexcept { return reseed_counter_ > reseed_interval_; }

 private:
  Value hash_df(std::initializer_list<ByteView> parts) const;

  ProviderPtr provider_;
  Value v_{};
  Value c_{};
  std::uint64_t reseed_counter_ = 0;
  std::uint64_t reseed_interval_;
};

class CtrDrbg {
 public:
  static constexpr std::size_t kSeedLen = 32;  // keylen + blocklen
  static constexpr std::size_t kMaxRequestBytes = 1 << 16;
  static constexpr std::uint64_t kMaxReseedInterval = 1ULL << 48;

  /// entropy must hold at least kSeedLen bytes; only the first kSeedLen are used.
  CtrDrbg(ProviderPtr provider, ByteView entropy, ByteView personalization = {},
          std::uint64_t reseed_interval = kMaxReseedInterval);

  void reseed(ByteView entropy, ByteView additional = {});
  void generate(std::span<std::uint8_t> out, ByteView additional = {});

  const AesKey& key() const noexcept { return key_; }
  const AesBlock& v() const noexcept { return v_; }
  std::uint64_t reseed_counter() const noexcept { return reseed_counter_; }
  bool reseed_due() const noexcept { return reseed_counter_ > reseed_interval_; }

 private:
  void update(const std::array<std::uint8_t, kSeedLen>& provided);
  static std::array<std::uint8_t, kSeedLen> pad(ByteView data);

  ProviderPtr provider_;
  AesKey key_{};
  AesBlock v_{};
  std::unique_ptr<BlockCipher> cipher_;
  std::uint64_t reseed_counter_ = 0;
  std::uint64_t reseed_interval_;
};

class Fortuna {
 public:
  static constexpr std::size_t kPools = 32;
  static constexpr std::size_t kMinPoolBytes = 64;
  static constexpr std::size_t kMaxRequestBytes = 1 << 20;
  static constexpr std::size_t kMaxEventBytes = 32;
  using Clock = std::chrono::steady_clock;

  Fortuna(ProviderPtr provider, ByteView seed, Clock::duration min_reseed_interval = std::chrono::milliseconds(100));

  /// Performs a pool-driven reseed first when pool 0 holds enough data and
  /// the minimum interval has elapsed.
  void generate(std::span<std::uint8_t> out);
  /// key <- sha256(sha256(key || seed)).
  void reseed(ByteView seed);
  void add_random_event(std::uint8_t source_id, ByteView data);

  const Digest& key() const noexcept { return key_; }
  const AesBlock& counter() const noexcept { return counter_; }
  std::size_t pool_length(std::size_t pool) const noexcept { return pool_bytes_[pool]; }
  std::uint64_t event_count() const noexcept { return event_counter_; }
  std::uint64_t pool_reseeds() const noexcept { return pool_reseeds_; }
  /// Bit i set iff pool i contributed to the most recent pool-driven reseed.
  std::uint32_t last_reseed_pools() const noexcept { return last_reseed_pools_; }

 private:
  void generate_blocks(std::span<std::uint8_t> out, std::size_t blocks);
  void increment_counter() noexcept;
  void reseed_from_pools();

  ProviderPtr provider_;
  Digest key_{};
  AesBlock counter_{};
  std::array<std::unique_ptr<HashContext>, kPools> pools_;
  std::array<std::size_t, kPools> pool_bytes_{};
  std::uint64_t event_counter_ = 0;
  std::uint64_t pool_reseeds_ = 0;
  std::uint32_t last_reseed_pools_ = 0;
  Clock::duration min_reseed_interval_;
  Clock::time_point last_reseed_{};
  bool reseeded_from_pools_ = false;
};

}  // namespace iotrng::crypto
