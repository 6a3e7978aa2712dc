// SPDX-License-Identifier: Apache-2.0
//
// General-purpose generators with small fixed-size integer states, plus a
// deliberately weak 16-bit LFSR kept as a negative statistical control.
//
// Every generator yields 32-bit words. Generators with a 64-bit native output
// deliver the low half first and buffer the high half, so 2N reads consume
// exactly N native steps.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>

#include "iotrng/descriptor.hpp"
#include "iotrng/error.hpp"

namespace iotrng::prng {

/// Fixed nonzero state substituted when seeding would produce an all-zero state.
inline constexpr std::uint64_t kZeroSubstitute = 0x9E3779B97F4A7C15ULL;

enum class GpVariant { KnuthLcg, Xorshift32, Xorshift64Star, Xoroshiro128Plus, MinStd, Mt19937, TinyMt32, Lfsr16 };

inline constexpr std::array<GpVariant, 8> kAllGpVariants = {
    GpVariant::KnuthLcg, GpVariant::Xorshift32, GpVariant::Xorshift64Star, GpVariant::Xoroshiro128Plus,
    GpVariant::MinStd,   GpVariant::Mt19937,    GpVariant::TinyMt32,       GpVariant::Lfsr16};

const GeneratorDescriptor& descriptor(GpVariant v) noexcept;

/// Knuth MMIX multiplier, increment 1, modulus 2^64; emits bits 63..32.
class KnuthLcg {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1;

  explicit KnuthLcg(std::uint64_t state) noexcept : state_(state) {}

  std::uint32_t next() noexcept {
    state_ = state_ * kMultiplier + kIncrement;
    return static_cast<std::uint32_t>(state_ >> 32);
  }
  std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

/// Marsaglia xorshift with the (13, 17, 5) triple. The output is the new state.
class Xorshift32 {
 public:
  explicit Xorshift32(std::uint32_t state) : state_(state) {
    if (state_ == 0) throw Error(Errc::ZeroState, "xorshift32 state must be nonzero");
  }

  std::uint32_t next() noexcept {
    std::uint32_t x = state_;
    x ^= x << 13;
    x ^= x >> 17;
    x ^= x << 5;
    state_ = x;
    return x;
  }
  std::uint32_t state() const noexcept { return state_; }

 private:
  std::uint32_t state_;
};

class Xorshift64Star {
 public:
  static constexpr std::uint64_t kMultiplier = 0x2545F4914F6CDD1DULL;

  explicit Xorshift64Star(std::uint64_t state) : state_(state) {
    if (state_ == 0) throw Error(Errc::ZeroState, "xorshift64* state must be nonzero");
  }

  std::uint64_t next_native() noexcept {
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    ++native_steps_;
    return x * kMultiplier;
  }

  std::uint32_t next() noexcept {
    if (pending_) {
      const std::uint32_t w = *pending_;
      pending_.reset();
      return w;
    }
    const std::uint64_t v = next_native();
    pending_ = static_cast<std::uint32_t>(v >> 32);
    return static_cast<std::uint32_t>(v);
  }

  std::uint64_t state() const noexcept { return state_; }
  std::uint64_t native_steps() const noexcept { return native_steps_; }

 private:
  std::uint64_t state_;
  std::optional<std::uint32_t> pending_;
  std::uint64_t native_steps_ = 0;
};

class Xoroshiro128Plus {
 public:
  Xoroshiro128Plus(std::uint64_t s0, std::uint64_t s1) : s0_(s0), s1_(s1) {
    if ((s0_ | s1_) == 0) throw Error(Errc::ZeroState, "xoroshiro128+ state must be nonzero");
  }

  std::uint64_t next_native() noexcept {
    const std::uint64_t s0 = s0_;
    std::uint64_t s1 = s1_;
    const std::uint64_t result = s0 + s1;
    s1 ^= s0;
    s0_ = rotl(s0, 55) ^ s1 ^ (s1 << 14);
    s1_ = rotl(s1, 36);
    ++native_steps_;
    return result;
  }

  std::uint32_t next() noexcept {
    if (pending_) {
      const std::uint32_t w = *pending_;
      pending_.reset();
      return w;
    }
    const std::uint64_t v = next_native();
    pending_ = static_cast<std::uint32_t>(v >> 32);
    return static_cast<std::uint32_t>(v);
  }

  std::array<std::uint64_t, 2> state() const noexcept { return {s0_, s1_}; }
  std::uint64_t native_steps() const noexcept { return native_steps_; }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

  std::uint64_t s0_;
  std::uint64_t s1_;
  std::optional<std::uint32_t> pending_;
  std::uint64_t native_steps_ = 0;
};

/// Park-Miller minimal standard (a = 16807, m = 2^31 - 1). One 32-bit word is
/// built from the low 16 bits of two consecutive Lehmer outputs.
class MinStd {
 public:
  static constexpr std::uint32_t kMultiplier = 16807;
  static constexpr std::uint32_t kModulus = 2147483647;  // 2^31 - 1

  explicit MinStd(std::uint32_t state) : state_(state) {
    if (state_ == 0 || state_ >= kModulus) throw Error(Errc::StateOutOfRange, "minstd state must be in [1, 2^31-2]");
  }

  std::uint32_t step() noexcept {
    state_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(state_) * kMultiplier) % kModulus);
    return state_;
  }

  std::uint32_t next() noexcept {
    const std::uint32_t x1 = step();
    const std::uint32_t x2 = step();
    return ((x1 & 0xFFFFu) << 16) | (x2 & 0xFFFFu);
  }

  std::uint32_t state() const noexcept { return state_; }

 private:
  std::uint32_t state_;
};

class Mt19937 {
 public:
  static constexpr std::size_t kWords = 624;

  /// Unseeded; next() throws NotInitialized until seed() is called.
  Mt19937() = default;
  explicit Mt19937(std::uint32_t seed) { this->seed(seed); }

  void seed(std::uint32_t seed) noexcept;
  std::uint32_t next();

  bool initialized() const noexcept { return index_ <= kWords; }
  const std::array<std::uint32_t, kWords>& table() const noexcept { return mt_; }
  std::size_t index() const noexcept { return index_; }
  std::uint64_t refills() const noexcept { return refills_; }

 private:
  void refill() noexcept;

  std::array<std::uint32_t, kWords> mt_{};
  std::size_t index_ = kWords + 1;
  std::uint64_t refills_ = 0;
};

/// TinyMT32 with the reference default parameter set.
class TinyMt32 {
 public:
  static constexpr std::uint32_t kMat1 = 0x8f7011eeu;
  static constexpr std::uint32_t kMat2 = 0xfc78ff1fu;
  static constexpr std::uint32_t kTmat = 0x3793fdffu;

  TinyMt32() = default;
  explicit TinyMt32(std::uint32_t seed) { this->seed(seed); }

  void seed(std::uint32_t seed) noexcept;
  std::uint32_t next();

  bool initialized() const noexcept { return initialized_; }
  const std::array<std::uint32_t, 4>& status() const noexcept { return status_; }

 private:
  void next_state() noexcept;
  std::uint32_t temper() const noexcept;

  std::array<std::uint32_t, 4> status_{};
  bool initialized_ = false;
};

/// 16-bit Fibonacci LFSR, polynomial x^16 + x^15 + x^13 + x^4 + 1. Each word
/// packs 32 consecutive output bits, the first emitted bit in bit 31.
class Lfsr16 {
 public:
  explicit Lfsr16(std::uint16_t state) : state_(state) {
    if (state_ == 0) throw Error(Errc::ZeroState, "lfsr16 state must be nonzero");
  }

  unsigned step_bit() noexcept {
    const unsigned out = state_ & 1u;
    const unsigned fb = (state_ ^ (state_ >> 1) ^ (state_ >> 3) ^ (state_ >> 12)) & 1u;
    state_ = static_cast<std::uint16_t>((state_ >> 1) | (fb << 15));
    return out;
  }

  std::uint32_t next() noexcept {
    std::uint32_t w = 0;
    for (int i = 0; i < 32; ++i) w = (w << 1) | step_bit();
    return w;
  }

  std::uint16_t state() const noexcept { return state_; }

 private:
  std::uint16_t state_;
};

using GpState = std::variant<KnuthLcg, Xorshift32, Xorshift64Star, Xoroshiro128Plus, MinStd, Mt19937, TinyMt32, Lfsr16>;

/// Total seeding function: every 64-bit seed yields a valid state.
GpState gp_seed(GpVariant variant, std::uint64_t seed);
std::uint32_t gp_next(GpState& state);
GpVariant gp_variant(const GpState& state) noexcept;

/// SplitMix64 step, used to expand one 64-bit seed into xoroshiro's 128 bits.
std::uint64_t splitmix64(std::uint64_t& x) noexcept;

}  // namespace iotrng::prng
