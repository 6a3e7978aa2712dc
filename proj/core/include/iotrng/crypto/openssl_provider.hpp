// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>

#include "iotrng/crypto/provider.hpp"

namespace iotrng::crypto {

/// Provider backed by libcrypto's EVP interfaces (uses AES-NI / SHA
/// extensions when the CPU has them). Only built when OpenSSL is found.
std::shared_ptr<const CryptoProvider> openssl_provider();

}  // namespace iotrng::crypto
