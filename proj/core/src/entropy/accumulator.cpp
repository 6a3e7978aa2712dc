// SPDX-License-Identifier: Apache-2.0
#include <algorithm>

#include "iotrng/entropy/source.hpp"
#include "iotrng/error.hpp"

namespace iotrng::entropy {

SeedMaterial accumulate(std::span<EntropySource* const> sources, unsigned required_bits,
                        const crypto::CryptoProvider& provider) {
  if (required_bits == 0) throw Error(Errc::InvalidArgument, "required entropy must be at least one bit");

  Bytes pool;
  std::uint64_t claimed = 0;
  while (claimed < required_bits) {
    std::uint64_t gained = 0;
    for (EntropySource* src : sources) {
      if (claimed >= required_bits) break;
      if (src == nullptr || !src->available()) continue;
      const Bytes s = src->sample();
      pool.insert(pool.end(), s.begin(), s.end());
      claimed += src->claimed_bits_per_sample();
      gained += src->claimed_bits_per_sample();
    }
    if (gained == 0) {
      secure_zero(pool);
      throw Error(Errc::EntropyExhausted, "entropy sources ran dry at " + std::to_string(claimed) + " of " +
                                              std::to_string(required_bits) + " bits");
    }
  }

  const std::size_t out_len = (required_bits + 7) / 8;
  Bytes out;
  out.reserve(out_len + 32);
  auto ctx = provider.new_sha256();
  for (std::uint32_t i = 0; out.size() < out_len; ++i) {
    std::uint8_t ctr[4];
    store_be32(ctr, i);
    ctx->update(pool);
    ctx->update(ctr);
    const crypto::Digest d = ctx->finish();
    out.insert(out.end(), d.begin(), d.end());
  }
  out.resize(out_len);
  secure_zero(pool);
  return SeedMaterial(std::move(out), required_bits);
}

}  // namespace iotrng::entropy
