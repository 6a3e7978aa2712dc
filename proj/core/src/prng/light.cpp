// SPDX-License-Identifier: Apache-2.0
#include "iotrng/prng/light.hpp"

namespace iotrng::prng {

namespace {

constexpr GeneratorDescriptor kDescriptors[] = {
    {"knuth-lcg", GeneratorClass::GeneralPurpose, 8, 64, 32},
    {"xorshift32", GeneratorClass::GeneralPurpose, 4, 32, 32},
    {"xorshift64star", GeneratorClass::GeneralPurpose, 12, 64, 64},
    {"xoroshiro128plus", GeneratorClass::GeneralPurpose, 20, 64, 64},
    {"minstd", GeneratorClass::GeneralPurpose, 4, 31, 31},
    {"mt19937", GeneratorClass::GeneralPurpose, 2500, 32, 32},
    {"tinymt32", GeneratorClass::GeneralPurpose, 28, 32, 32},
    {"lfsr16", GeneratorClass::ReferenceWeak, 2, 16, 1},
};

}  // namespace

const GeneratorDescriptor& descriptor(GpVariant v) noexcept { return kDescriptors[static_cast<int>(v)]; }

std::uint64_t splitmix64(std::uint64_t& x) noexcept {
  std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// --- Mt19937 ---------------------------------------------------------------

void Mt19937::seed(std::uint32_t seed) noexcept {
  mt_[0] = seed;
  for (std::size_t i = 1; i < kWords; ++i) {
    mt_[i] = 1812433253u * (mt_[i - 1] ^ (mt_[i - 1] >> 30)) + static_cast<std::uint32_t>(i);
  }
  index_ = kWords;
}

void Mt19937::refill() noexcept {
  constexpr std::size_t kM = 397;
  constexpr std::uint32_t kMatrixA = 0x9908b0dfu;
  constexpr std::uint32_t kUpper = 0x80000000u;
  constexpr std::uint32_t kLower = 0x7fffffffu;
  for (std::size_t i = 0; i < kWords; ++i) {
    const std::uint32_t y = (mt_[i] & kUpper) | (mt_[(i + 1) % kWords] & kLower);
    mt_[i] = mt_[(i + kM) % kWords] ^ (y >> 1) ^ ((y & 1u) ? kMatrixA : 0u);
  }
  index_ = 0;
  ++refills_;
}

std::uint32_t Mt19937::next() {
  if (index_ > kWords) throw Error(Errc::NotInitialized, "mt19937 used before seeding");
  if (index_ == kWords) refill();
  std::uint32_t y = mt_[index_++];
  y ^= y >> 11;
  y ^= (y << 7) & 0x9d2c5680u;
  y ^= (y << 15) & 0xefc60000u;
  y ^= y >> 18;
  return y;
}

// --- TinyMt32 --------------------------------------------------------------

void TinyMt32::seed(std::uint32_t seed) noexcept {
  constexpr int kMinLoop = 8;
  constexpr int kPreLoop = 8;
  status_ = {seed, kMat1, kMat2, kTmat};
  for (int i = 1; i < kMinLoop; ++i) {
    const std::uint32_t prev = status_[(i - 1) & 3];
    status_[i & 3] ^= static_cast<std::uint32_t>(i) + 1812433253u * (prev ^ (prev >> 30));
  }
  // period certification
  if ((status_[0] & 0x7fffffffu) == 0 && status_[1] == 0 && status_[2] == 0 && status_[3] == 0) {
    status_ = {'T', 'I', 'N', 'Y'};
  }
  for (int i = 0; i < kPreLoop; ++i) next_state();
  initialized_ = true;
}

void TinyMt32::next_state() noexcept {
  std::uint32_t y = status_[3];
  std::uint32_t x = (status_[0] & 0x7fffffffu) ^ status_[1] ^ status_[2];
  x ^= x << 1;
  y ^= (y >> 1) ^ x;
  status_[0] = status_[1];
  status_[1] = status_[2];
  status_[2] = x ^ (y << 10);
  status_[3] = y;
  const std::uint32_t mask = 0u - (y & 1u);
  status_[1] ^= mask & kMat1;
  status_[2] ^= mask & kMat2;
}

std::uint32_t TinyMt32::temper() const noexcept {
  std::uint32_t t0 = status_[3];
  const std::uint32_t t1 = status_[0] + (status_[2] >> 8);
  t0 ^= t1;
  t0 ^= (0u - (t1 & 1u)) & kTmat;
  return t0;
}

std::uint32_t TinyMt32::next() {
  if (!initialized_) throw Error(Errc::NotInitialized, "tinymt32 used before seeding");
  next_state();
  return temper();
}

// --- seeding / dispatch ----------------------------------------------------

GpState gp_seed(GpVariant variant, std::uint64_t seed) {
  const auto lo32 = static_cast<std::uint32_t>(seed);
  switch (variant) {
    case GpVariant::KnuthLcg:
      return KnuthLcg(seed);
    case GpVariant::Xorshift32:
      return Xorshift32(lo32 != 0 ? lo32 : static_cast<std::uint32_t>(kZeroSubstitute));
    case GpVariant::Xorshift64Star:
      return Xorshift64Star(seed != 0 ? seed : kZeroSubstitute);
    case GpVariant::Xoroshiro128Plus: {
      std::uint64_t sm = seed;
      const std::uint64_t s0 = splitmix64(sm);
      const std::uint64_t s1 = splitmix64(sm);
      if ((s0 | s1) == 0) return Xoroshiro128Plus(kZeroSubstitute, 0);
      return Xoroshiro128Plus(s0, s1);
    }
    case GpVariant::MinStd: {
      auto s = static_cast<std::uint32_t>(seed % MinStd::kModulus);
      return MinStd(s == 0 ? 1 : s);
    }
    case GpVariant::Mt19937:
      return Mt19937(lo32);
    case GpVariant::TinyMt32:
      return TinyMt32(lo32);
    case GpVariant::Lfsr16: {
      auto s = static_cast<std::uint16_t>(seed);
      return Lfsr16(s != 0 ? s : static_cast<std::uint16_t>(kZeroSubstitute));
    }
  }
  throw Error(Errc::UnknownAlgorithm, "unknown general-purpose variant");
}

std::uint32_t gp_next(GpState& state) {
  return std::visit([](auto& g) -> std::uint32_t { return g.next(); }, state);
}

GpVariant gp_variant(const GpState& state) noexcept { return static_cast<GpVariant>(state.index()); }

}  // namespace iotrng::prng
