// SPDX-License-Identifier: Apache-2.0
//
// Cryptographic primitive provider: the seam through which SHA-256 and
// AES-128 can be swapped for other (e.g. hardware-backed) implementations.
// Implementations must be callable from multiple threads concurrently.
#pragma once

#include <atomic>
#include <memory>
#include <string_view>

#include "iotrng/bytes.hpp"
#include "iotrng/crypto/aes128.hpp"
#include "iotrng/crypto/sha256.hpp"

namespace iotrng::crypto {

class HashContext {
 public:
  virtual ~HashContext() = default;
  virtual void update(ByteView data) = 0;
  /// Returns the digest and leaves the context reset for reuse.
  virtual Digest finish() = 0;
};

class BlockCipher {
 public:
  virtual ~BlockCipher() = default;
  virtual AesBlock encrypt(const AesBlock& block) const = 0;
};

class CryptoProvider {
 public:
  virtual ~CryptoProvider() = default;

  virtual std::string_view name() const noexcept = 0;
  virtual std::unique_ptr<HashContext> new_sha256() const = 0;
  /// Expands the key once; the returned cipher may encrypt many blocks.
  virtual std::unique_ptr<BlockCipher> new_aes128(const AesKey& key) const = 0;

  virtual Digest sha256(ByteView data) const;
  AesBlock aes128_encrypt_block(const AesKey& key, const AesBlock& block) const;

  /// Runs the known-answer tests once per provider object; later calls are
  /// free. Throws Error(SelfTestFailed) if any vector mismatches.
  void ensure_self_tested() const;

 private:
  mutable std::atomic<int> self_test_state_{0};  // 0 untested, 1 passed, -1 failed
};

/// Portable software implementation, always available.
class BuiltinProvider final : public CryptoProvider {
 public:
  std::string_view name() const noexcept override { return "builtin"; }
  std::unique_ptr<HashContext> new_sha256() const override;
  std::unique_ptr<BlockCipher> new_aes128(const AesKey& key) const override;
  Digest sha256(ByteView data) const override { return Sha256::hash(data); }
};

std::shared_ptr<const CryptoProvider> builtin_provider();

/// Checks the provider against the FIPS 180-4 / FIPS 197 known answers.
bool run_known_answer_tests(const CryptoProvider& provider);

}  // namespace iotrng::crypto
