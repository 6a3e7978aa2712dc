// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cstring>

#include "iotrng/crypto/drbg.hpp"
#include "iotrng/error.hpp"

namespace iotrng::crypto {

namespace {

Digest sha256d(const CryptoProvider& provider, ByteView a, ByteView b) {
  auto ctx = provider.new_sha256();
  ctx->update(a);
  ctx->update(b);
  const Digest inner = ctx->finish();
  return provider.sha256(inner);
}

}  // namespace

Fortuna::Fortuna(ProviderPtr provider, ByteView seed, Clock::duration min_reseed_interval)
    : provider_(std::move(provider)), min_reseed_interval_(min_reseed_interval) {
  key_ = provider_->sha256(provider_->sha256(seed));
  counter_.fill(0);
  counter_[0] = 1;
  for (auto& pool : pools_) pool = provider_->new_sha256();
}

void Fortuna::increment_counter() noexcept {
  for (auto& b : counter_) {
    if (++b != 0) break;
  }
}

void Fortuna::generate_blocks(std::span<std::uint8_t> out, std::size_t blocks) {
  AesKey k;
  std::memcpy(k.data(), key_.data(), k.size());
  const auto cipher = provider_->new_aes128(k);
  secure_zero(k);
  for (std::size_t i = 0; i < blocks; ++i) {
    const AesBlock block = cipher->encrypt(counter_);
    std::memcpy(out.data() + 16 * i, block.data(), 16);
    increment_counter();
  }
}

void Fortuna::reseed(ByteView seed) {
  key_ = sha256d(*provider_, key_, seed);
  increment_counter();
}

void Fortuna::reseed_from_pools() {
  ++pool_reseeds_;
  Bytes material;
  last_reseed_pools_ = 0;
  for (std::size_t i = 0; i < kPools; ++i) {
    if (pool_reseeds_ % (std::uint64_t{1} << i) != 0) break;
    const Digest d = pools_[i]->finish();
    material.insert(material.end(), d.begin(), d.end());
    pool_bytes_[i] = 0;
    last_reseed_pools_ |= 1u << i;
  }
  reseed(material);
  secure_zero(material);
  last_reseed_ = Clock::now();
  reseeded_from_pools_ = true;
}

void Fortuna::generate(std::span<std::uint8_t> out) {
  if (out.size() > kMaxRequestBytes) throw Error(Errc::RequestTooLarge, "fortuna request exceeds 2^20 bytes");
  if (pool_bytes_[0] >= kMinPoolBytes &&
      (!reseeded_from_pools_ || Clock::now() - last_reseed_ >= min_reseed_interval_)) {
    reseed_from_pools();
  }
  const std::size_t blocks = (out.size() + 15) / 16;
  if (blocks * 16 == out.size()) {
    generate_blocks(out, blocks);
  } else {
    Bytes tmp(blocks * 16);
    generate_blocks(tmp, blocks);
    std::memcpy(out.data(), tmp.data(), out.size());
    secure_zero(tmp);
  }
  generate_blocks(key_, 2);
}

void Fortuna::add_random_event(std::uint8_t source_id, ByteView data) {
  if (data.empty()) throw Error(Errc::InvalidArgument, "fortuna event must carry at least one byte");
  if (data.size() > kMaxEventBytes) throw Error(Errc::EventTooLarge, "fortuna events carry at most 32 bytes");
  const std::size_t pool = event_counter_ % kPools;
  const std::uint8_t header[2] = {source_id, static_cast<std::uint8_t>(data.size())};
  pools_[pool]->update(header);
  pools_[pool]->update(data);
  pool_bytes_[pool] += sizeof(header) + data.size();
  ++event_counter_;
}

}  // namespace iotrng::crypto
