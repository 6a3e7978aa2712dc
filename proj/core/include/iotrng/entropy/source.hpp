// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>

#include "iotrng/bytes.hpp"
#include "iotrng/crypto/provider.hpp"
#include "iotrng/seed.hpp"

namespace iotrng::entropy {

/// A source hands out fixed-size samples and vouches for a number of entropy
/// bits per sample. A blocked source reports !available() instead of
/// returning weak bytes.
class EntropySource {
 public:
  virtual ~EntropySource() = default;

  virtual const std::string& id() const noexcept = 0;
  virtual std::size_t sample_size() const noexcept = 0;
  virtual unsigned claimed_bits_per_sample() const noexcept = 0;
  virtual bool available() const = 0;
  /// Throws SourceExhausted when unavailable.
  virtual Bytes sample() = 0;
};

/// Source backed by a callable; the claim is validated against the size.
class CallbackSource final : public EntropySource {
 public:
  using SampleFn = std::function<Bytes(std::size_t)>;
  using AvailableFn = std::function<bool()>;

  CallbackSource(std::string id, std::size_t sample_size, unsigned claimed_bits, SampleFn sample,
                 AvailableFn available = {});

  const std::string& id() const noexcept override { return id_; }
  std::size_t sample_size() const noexcept override { return size_; }
  unsigned claimed_bits_per_sample() const noexcept override { return claimed_; }
  bool available() const override { return !available_ || available_(); }
  Bytes sample() override;

 private:
  std::string id_;
  std::size_t size_;
  unsigned claimed_;
  SampleFn sample_;
  AvailableFn available_;
};

/// Host operating-system randomness (getrandom, falling back to
/// std::random_device), claimed at 8 bits per byte.
std::unique_ptr<EntropySource> host_entropy_source(std::size_t sample_size = 16);

/// Polls available sources round-robin until the claimed bits reach
/// required_bits, then compresses the concatenated samples into
/// ceil(required_bits / 8) bytes: block i = sha256(samples || be32(i)).
/// The result claims min(required_bits, sum of claims). Throws
/// EntropyExhausted if every source is unavailable before the target is met.
SeedMaterial accumulate(std::span<EntropySource* const> sources, unsigned required_bits,
                        const crypto::CryptoProvider& provider = *crypto::builtin_provider());

}  // namespace iotrng::entropy
