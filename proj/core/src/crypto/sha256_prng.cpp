// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cstring>

#include "iotrng/crypto/drbg.hpp"

namespace iotrng::crypto {

Sha256Prng::Sha256Prng(ProviderPtr provider, ByteView seed)
    : provider_(std::move(provider)), state_(provider_->sha256(seed)) {}

Digest Sha256Prng::advance(const Digest& state, const Digest& output) noexcept {
  Digest next{};
  unsigned carry = 1;
  for (int i = 31; i >= 0; --i) {
    const unsigned sum = static_cast<unsigned>(state[i]) + output[i] + carry;
    next[i] = static_cast<std::uint8_t>(sum);
    carry = sum >> 8;
  }
  return next;
}

void Sha256Prng::refill() {
  cache_ = provider_->sha256(state_);
  ++hash_calls_;
  state_ = advance(state_, cache_);
  cache_pos_ = 0;
}

void Sha256Prng::generate(std::span<std::uint8_t> out) {
  std::size_t done = 0;
  while (done < out.size()) {
    if (cache_pos_ == cache_.size()) refill();
    const std::size_t take = std::min(out.size() - done, cache_.size() - cache_pos_);
    std::memcpy(out.data() + done, cache_.data() + cache_pos_, take);
    secure_zero({cache_.data() + cache_pos_, take});
    cache_pos_ += take;
    done += take;
  }
}

void Sha256Prng::reseed(ByteView seed) {
  auto ctx = provider_->new_sha256();
  ctx->update(state_);
  ctx->update(seed);
  state_ = ctx->finish();
  secure_zero(cache_);
  cache_pos_ = cache_.size();
}

}  // namespace iotrng::crypto
