// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cstring>

#include "iotrng/crypto/drbg.hpp"
#include "iotrng/error.hpp"

namespace iotrng::crypto {

namespace {

void increment_be(AesBlock& v) noexcept {
  for (int i = 15; i >= 0; --i) {
    if (++v[i] != 0) break;
  }
}

}  // namespace

std::array<std::uint8_t, CtrDrbg::kSeedLen> CtrDrbg::pad(ByteView data) {
  std::array<std::uint8_t, kSeedLen> out{};
  std::memcpy(out.data(), data.data(), std::min(data.size(), out.size()));
  return out;
}

CtrDrbg::CtrDrbg(ProviderPtr provider, ByteView entropy, ByteView personalization, std::uint64_t reseed_interval)
    : provider_(std::move(provider)), reseed_interval_(std::min(reseed_interval, kMaxReseedInterval)) {
  if (entropy.size() < kSeedLen) throw Error(Errc::SeedTooShort, "ctr_drbg needs 256 bits of entropy input");
  auto seed_material = pad(personalization);
  for (std::size_t i = 0; i < kSeedLen; ++i) seed_material[i] ^= entropy[i];
  key_.fill(0);
  v_.fill(0);
  cipher_ = provider_->new_aes128(key_);
  update(seed_material);
  secure_zero(seed_material);
  reseed_counter_ = 1;
}

void CtrDrbg::update(const std::array<std::uint8_t, kSeedLen>& provided) {
  std::array<std::uint8_t, kSeedLen> temp;
  for (std::size_t off = 0; off < kSeedLen; off += 16) {
    increment_be(v_);
    const AesBlock block = cipher_->encrypt(v_);
    std::memcpy(temp.data() + off, block.data(), 16);
  }
  for (std::size_t i = 0; i < kSeedLen; ++i) temp[i] ^= provided[i];
  std::memcpy(key_.data(), temp.data(), 16);
  std::memcpy(v_.data(), temp.data() + 16, 16);
  secure_zero(temp);
  cipher_ = provider_->new_aes128(key_);
}

void CtrDrbg::reseed(ByteView entropy, ByteView additional) {
  if (entropy.size() < kSeedLen) throw Error(Errc::SeedTooShort, "ctr_drbg needs 256 bits of entropy input");
  auto seed_material = pad(additional);
  for (std::size_t i = 0; i < kSeedLen; ++i) seed_material[i] ^= entropy[i];
  update(seed_material);
  secure_zero(seed_material);
  reseed_counter_ = 1;
}

void CtrDrbg::generate(std::span<std::uint8_t> out, ByteView additional) {
  if (out.size() > kMaxRequestBytes) throw Error(Errc::RequestTooLarge, "ctr_drbg request exceeds 2^19 bits");
  if (reseed_due()) throw Error(Errc::ReseedRequired, "ctr_drbg reseed counter exhausted");
  const auto add = pad(additional);
  if (!additional.empty()) update(add);
  std::size_t done = 0;
  while (done < out.size()) {
    increment_be(v_);
    const AesBlock block = cipher_->encrypt(v_);
    const std::size_t take = std::min<std::size_t>(16, out.size() - done);
    std::memcpy(out.data() + done, block.data(), take);
    done += take;
  }
  update(add);
  ++reseed_counter_;
}

}  // namespace iotrng::crypto
