// SPDX-License-Identifier: Apache-2.0
#include "iotrng/crypto/openssl_provider.hpp"

#include <openssl/evp.h>

#include "iotrng/error.hpp"

namespace iotrng::crypto {

namespace {

class EvpHash final : public HashContext {
 public:
  EvpHash() : ctx_(EVP_MD_CTX_new()) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_, EVP_sha256(), nullptr) != 1) {
      throw Error(Errc::SelfTestFailed, "EVP_DigestInit_ex failed");
    }
  }
  ~EvpHash() override { EVP_MD_CTX_free(ctx_); }
  EvpHash(const EvpHash&) = delete;
  EvpHash& operator=(const EvpHash&) = delete;

  void update(ByteView data) override { EVP_DigestUpdate(ctx_, data.data(), data.size()); }

  Digest finish() override {
    Digest out{};
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx_, out.data(), &len);
    EVP_DigestInit_ex(ctx_, EVP_sha256(), nullptr);
    return out;
  }

 private:
  EVP_MD_CTX* ctx_;
};

class EvpAes final : public BlockCipher {
 public:
  explicit EvpAes(const AesKey& key) : ctx_(EVP_CIPHER_CTX_new()) {
    if (!ctx_ || EVP_EncryptInit_ex(ctx_, EVP_aes_128_ecb(), nullptr, key.data(), nullptr) != 1) {
      throw Error(Errc::SelfTestFailed, "EVP_EncryptInit_ex failed");
    }
    EVP_CIPHER_CTX_set_padding(ctx_, 0);
  }
  ~EvpAes() override { EVP_CIPHER_CTX_free(ctx_); }
  EvpAes(const EvpAes&) = delete;
  EvpAes& operator=(const EvpAes&) = delete;

  AesBlock encrypt(const AesBlock& block) const override {
    AesBlock out{};
    int len = 0;
    EVP_EncryptUpdate(ctx_, out.data(), &len, block.data(), static_cast<int>(block.size()));
    return out;
  }

 private:
  EVP_CIPHER_CTX* ctx_;
};

class OpenSslProvider final : public CryptoProvider {
 public:
  std::string_view name() const noexcept override { return "openssl"; }
  std::unique_ptr<HashContext> new_sha256() const override { return std::make_unique<EvpHash>(); }
  std::unique_ptr<BlockCipher> new_aes128(const AesKey& key) const override { return std::make_unique<EvpAes>(key); }
};

}  // namespace

std::shared_ptr<const CryptoProvider> openssl_provider() {
  static const auto instance = std::make_shared<const OpenSslProvider>();
  return instance;
}

}  // namespace iotrng::crypto
