// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cstring>

#include "iotrng/crypto/drbg.hpp"
#include "iotrng/error.hpp"

namespace iotrng::crypto {

namespace {

using Value = HashDrbg::Value;

// a = (a + b) mod 2^440; b is right-aligned (big-endian) against a.
void add_into(Value& a, ByteView b) noexcept {
  unsigned carry = 0;
  std::size_t ai = a.size();
  std::size_t bi = b.size();
  while (ai > 0) {
    --ai;
    unsigned sum = a[ai] + carry;
    if (bi > 0) sum += b[--bi];
    a[ai] = static_cast<std::uint8_t>(sum);
    carry = sum >> 8;
  }
}

void add_u64(Value& a, std::uint64_t x) noexcept {
  std::uint8_t be[8];
  for (int i = 0; i < 8; ++i) be[i] = static_cast<std::uint8_t>(x >> (56 - 8 * i));
  add_into(a, be);
}

}  // namespace

HashDrbg::HashDrbg(ProviderPtr provider, ByteView entropy, ByteView nonce, ByteView personalization,
                   std::uint64_t reseed_interval)
    : provider_(std::move(provider)), reseed_interval_(std::min(reseed_interval, kMaxReseedInterval)) {
  v_ = hash_df({entropy, nonce, personalization});
  const std::uint8_t zero = 0x00;
  c_ = hash_df({ByteView(&zero, 1), v_});
  reseed_counter_ = 1;
}

Value HashDrbg::hash_df(std::initializer_list<ByteView> parts) const {
  constexpr std::uint32_t kBits = kSeedLen * 8;
  Value out{};
  std::size_t filled = 0;
  for (std::uint8_t counter = 1; filled < out.size(); ++counter) {
    std::uint8_t header[5] = {counter, 0, 0, 0, 0};
    store_be32(header + 1, kBits);
    auto ctx = provider_->new_sha256();
    ctx->update(header);
    for (ByteView p : parts) ctx->update(p);
    const Digest d = ctx->finish();
    const std::size_t take = std::min(d.size(), out.size() - filled);
    std::memcpy(out.data() + filled, d.data(), take);
    filled += take;
  }
  return out;
}

void HashDrbg::reseed(ByteView entropy, ByteView additional) {
  const std::uint8_t one = 0x01;
  const Value old_v = v_;
  v_ = hash_df({ByteView(&one, 1), old_v, entropy, additional});
  const std::uint8_t zero = 0x00;
  c_ = hash_df({ByteView(&zero, 1), v_});
  reseed_counter_ = 1;
}

void HashDrbg::generate(std::span<std::uint8_t> out, ByteView additional) {
  if (out.size() > kMaxRequestBytes) throw Error(Errc::RequestTooLarge, "hash_drbg request exceeds 2^19 bits");
  if (reseed_due()) throw Error(Errc::ReseedRequired, "hash_drbg reseed counter exhausted");
  if (!additional.empty()) {
    auto ctx = provider_->new_sha256();
    const std::uint8_t two = 0x02;
    ctx->update(ByteView(&two, 1));
    ctx->update(v_);
    ctx->update(additional);
    add_into(v_, ctx->finish());
  }
  // Hashgen
  Value data = v_;
  std::size_t done = 0;
  while (done < out.size()) {
    const Digest w = provider_->sha256(data);
    const std::size_t take = std::min(w.size(), out.size() - done);
    std::memcpy(out.data() + done, w.data(), take);
    done += take;
    add_u64(data, 1);
  }
  auto ctx = provider_->new_sha256();
  const std::uint8_t three = 0x03;
  ctx->update(ByteView(&three, 1));
  ctx->update(v_);
  const Digest h = ctx->finish();
  add_into(v_, h);
  add_into(v_, c_);
  add_u64(v_, reseed_counter_);
  ++reseed_counter_;
}

}  // namespace iotrng::crypto
