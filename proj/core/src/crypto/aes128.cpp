// SPDX-License-Identifier: Apache-2.0
#include "iotrng/crypto/aes128.hpp"

#include "iotrng/bytes.hpp"

namespace iotrng::crypto {

namespace {

constexpr std::uint8_t xtime(std::uint8_t x) noexcept {
  return static_cast<std::uint8_t>((x << 1) ^ ((x & 0x80) ? 0x1b : 0x00));
}

constexpr std::uint8_t gf_mul(std::uint8_t a, std::uint8_t b) noexcept {
  std::uint8_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a = xtime(a);
    b >>= 1;
  }
  return r;
}

constexpr std::array<std::uint8_t, 256> make_sbox() noexcept {
  std::array<std::uint8_t, 256> box{};
  for (int x = 0; x < 256; ++x) {
    std::uint8_t inv = 0;
    if (x != 0) {
      for (int y = 1; y < 256; ++y) {
        if (gf_mul(static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y)) == 1) {
          inv = static_cast<std::uint8_t>(y);
          break;
        }
      }
    }
    std::uint8_t s = inv;
    std::uint8_t r = inv;
    for (int i = 0; i < 4; ++i) {
      r = static_cast<std::uint8_t>((r << 1) | (r >> 7));
      s ^= r;
    }
    box[x] = static_cast<std::uint8_t>(s ^ 0x63);
  }
  return box;
}

constexpr auto kSbox = make_sbox();

// Te0[x] = (2s, s, s, 3s) packed big-endian; the other columns are rotations.
constexpr std::array<std::uint32_t, 256> make_te0() noexcept {
  std::array<std::uint32_t, 256> t{};
  for (int x = 0; x < 256; ++x) {
    const std::uint8_t s = kSbox[x];
    t[x] = (static_cast<std::uint32_t>(gf_mul(s, 2)) << 24) | (static_cast<std::uint32_t>(s) << 16) |
           (static_cast<std::uint32_t>(s) << 8) | gf_mul(s, 3);
  }
  return t;
}

constexpr auto kTe0 = make_te0();

constexpr std::uint32_t rotr8(std::uint32_t x, int n) noexcept { return (x >> (8 * n)) | (x << (32 - 8 * n)); }

constexpr std::uint32_t sub_word(std::uint32_t w) noexcept {
  return (static_cast<std::uint32_t>(kSbox[w >> 24]) << 24) | (static_cast<std::uint32_t>(kSbox[(w >> 16) & 0xff]) << 16) |
         (static_cast<std::uint32_t>(kSbox[(w >> 8) & 0xff]) << 8) | kSbox[w & 0xff];
}

}  // namespace

Aes128::Aes128(const AesKey& key) noexcept {
  constexpr std::uint8_t kRcon[10] = {0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80, 0x1b, 0x36};
  for (int i = 0; i < 4; ++i) round_keys_[i] = load_be32(key.data() + 4 * i);
  for (int i = 4; i < 44; ++i) {
    std::uint32_t t = round_keys_[i - 1];
    if (i % 4 == 0) t = sub_word((t << 8) | (t >> 24)) ^ (static_cast<std::uint32_t>(kRcon[i / 4 - 1]) << 24);
    round_keys_[i] = round_keys_[i - 4] ^ t;
  }
}

Aes128::~Aes128() {
  secure_zero({reinterpret_cast<std::uint8_t*>(round_keys_.data()), sizeof(round_keys_)});
}

AesBlock Aes128::encrypt(const AesBlock& in) const noexcept {
  const std::uint32_t* rk = round_keys_.data();
  std::uint32_t s0 = load_be32(in.data()) ^ rk[0];
  std::uint32_t s1 = load_be32(in.data() + 4) ^ rk[1];
  std::uint32_t s2 = load_be32(in.data() + 8) ^ rk[2];
  std::uint32_t s3 = load_be32(in.data() + 12) ^ rk[3];
  auto te = [](std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
    return kTe0[a >> 24] ^ rotr8(kTe0[(b >> 16) & 0xff], 1) ^ rotr8(kTe0[(c >> 8) & 0xff], 2) ^ rotr8(kTe0[d & 0xff], 3);
  };
  for (int round = 1; round < 10; ++round) {
    rk += 4;
    const std::uint32_t t0 = te(s0, s1, s2, s3) ^ rk[0];
    const std::uint32_t t1 = te(s1, s2, s3, s0) ^ rk[1];
    const std::uint32_t t2 = te(s2, s3, s0, s1) ^ rk[2];
    const std::uint32_t t3 = te(s3, s0, s1, s2) ^ rk[3];
    s0 = t0;
    s1 = t1;
    s2 = t2;
    s3 = t3;
  }
  rk += 4;
  auto last = [](std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
    return (static_cast<std::uint32_t>(kSbox[a >> 24]) << 24) | (static_cast<std::uint32_t>(kSbox[(b >> 16) & 0xff]) << 16) |
           (static_cast<std::uint32_t>(kSbox[(c >> 8) & 0xff]) << 8) | kSbox[d & 0xff];
  };
  AesBlock out;
  store_be32(out.data(), last(s0, s1, s2, s3) ^ rk[0]);
  store_be32(out.data() + 4, last(s1, s2, s3, s0) ^ rk[1]);
  store_be32(out.data() + 8, last(s2, s3, s0, s1) ^ rk[2]);
  store_be32(out.data() + 12, last(s3, s0, s1, s2) ^ rk[3]);
  return out;
}

}  // namespace iotrng::crypto
