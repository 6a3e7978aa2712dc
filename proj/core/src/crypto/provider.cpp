// SPDX-License-Identifier: Apache-2.0
#include "iotrng/crypto/provider.hpp"

#include <algorithm>
#include <string>

#include "iotrng/error.hpp"

namespace iotrng::crypto {

namespace {

class BuiltinHash final : public HashContext {
 public:
  void update(ByteView data) override { h_.update(data); }
  Digest finish() override { return h_.finish(); }

 private:
  Sha256 h_;
};

class BuiltinAes final : public BlockCipher {
 public:
  explicit BuiltinAes(const AesKey& key) : aes_(key) {}
  AesBlock encrypt(const AesBlock& block) const override { return aes_.encrypt(block); }

 private:
  Aes128 aes_;
};

bool equals_hex(ByteView got, std::string_view hex) { return to_hex(got) == hex; }

}  // namespace

Digest CryptoProvider::sha256(ByteView data) const {
  auto ctx = new_sha256();
  ctx->update(data);
  return ctx->finish();
}

AesBlock CryptoProvider::aes128_encrypt_block(const AesKey& key, const AesBlock& block) const {
  return new_aes128(key)->encrypt(block);
}

void CryptoProvider::ensure_self_tested() const {
  int state = self_test_state_.load(std::memory_order_acquire);
  if (state == 0) {
    state = run_known_answer_tests(*this) ? 1 : -1;
    self_test_state_.store(state, std::memory_order_release);
  }
  if (state < 0) throw Error(Errc::SelfTestFailed, "crypto provider '" + std::string(name()) + "' failed known-answer tests");
}

std::unique_ptr<HashContext> BuiltinProvider::new_sha256() const { return std::make_unique<BuiltinHash>(); }

std::unique_ptr<BlockCipher> BuiltinProvider::new_aes128(const AesKey& key) const {
  return std::make_unique<BuiltinAes>(key);
}

std::shared_ptr<const CryptoProvider> builtin_provider() {
  static const auto instance = std::make_shared<const BuiltinProvider>();
  return instance;
}

bool run_known_answer_tests(const CryptoProvider& provider) {
  const std::string_view abc = "abc";
  const Bytes abc_bytes(abc.begin(), abc.end());
  if (!equals_hex(provider.sha256(abc_bytes), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad")) {
    return false;
  }
  if (!equals_hex(provider.sha256({}), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855")) {
    return false;
  }
  // Two-block message, fed in uneven pieces through the incremental interface.
  const std::string_view two_block = "abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq";
  auto ctx = provider.new_sha256();
  ctx->update({reinterpret_cast<const std::uint8_t*>(two_block.data()), 5});
  ctx->update({reinterpret_cast<const std::uint8_t*>(two_block.data()) + 5, two_block.size() - 5});
  if (!equals_hex(ctx->finish(), "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1")) return false;

  AesKey key;
  AesBlock plain;
  for (int i = 0; i < 16; ++i) {
    key[i] = static_cast<std::uint8_t>(i);
    plain[i] = static_cast<std::uint8_t>(0x11 * i);
  }
  if (!equals_hex(provider.aes128_encrypt_block(key, plain), "69c4e0d86a7b0430d8cdb78070b4c55a")) return false;
  return true;
}

}  // namespace iotrng::crypto
