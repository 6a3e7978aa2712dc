// SPDX-License-Identifier: Apache-2.0
#include "iotrng/crypto/csprng.hpp"

#include <string>

#include "iotrng/error.hpp"

namespace iotrng::crypto {

namespace {

constexpr GeneratorDescriptor kDescriptors[] = {
    {"sha256prng", GeneratorClass::CryptoSecure, 64, 128, 256},
    {"hash-drbg", GeneratorClass::CryptoSecure, 118, 128, 256},
    {"ctr-drbg", GeneratorClass::CryptoSecure, 40, 256, 128},
    {"fortuna", GeneratorClass::CryptoSecure, 48 + Fortuna::kPools * 112, 128, 128},
};

}  // namespace

const GeneratorDescriptor& descriptor(CsprngAlgorithm algorithm) noexcept {
  return kDescriptors[static_cast<int>(algorithm)];
}

unsigned max_strength(CsprngAlgorithm algorithm) noexcept {
  switch (algorithm) {
    case CsprngAlgorithm::Sha256Prng:
    case CsprngAlgorithm::HashDrbg:
      return 256;
    case CsprngAlgorithm::CtrDrbg:
    case CsprngAlgorithm::Fortuna:
      return 128;
  }
  return 0;
}

CsprngAlgorithm parse_csprng_algorithm(std::string_view name) {
  for (CsprngAlgorithm a : kAllCsprngAlgorithms) {
    if (descriptor(a).name == name) return a;
  }
  throw Error(Errc::UnknownAlgorithm, "unknown crypto-secure algorithm '" + std::string(name) + "'");
}

CsprngInstance CsprngInstance::instantiate(const GeneratorDescriptor& desc, const SeedMaterial& seed,
                                           unsigned strength_bits, CsprngOptions options) {
  if (desc.klass != GeneratorClass::CryptoSecure) {
    throw Error(Errc::NotCryptoSecure, "'" + std::string(desc.name) + "' is not a crypto-secure generator");
  }
  return instantiate(parse_csprng_algorithm(desc.name), seed, strength_bits, std::move(options));
}

CsprngInstance CsprngInstance::instantiate(CsprngAlgorithm algorithm, const SeedMaterial& seed,
                                           unsigned strength_bits, CsprngOptions options) {
  if (strength_bits < kMinSecurityStrength) {
    throw Error(Errc::StrengthTooLow, "security strength must be at least 128 bits");
  }
  if (strength_bits > max_strength(algorithm)) {
    throw Error(Errc::StrengthUnsupported, std::string(descriptor(algorithm).name) + " supports at most " +
                                               std::to_string(max_strength(algorithm)) + " bits");
  }
  if (seed.claimed_entropy_bits() < strength_bits) {
    throw Error(Errc::InsufficientEntropy, "seed claims " + std::to_string(seed.claimed_entropy_bits()) +
                                               " bits, strength needs " + std::to_string(strength_bits));
  }
  if (algorithm == CsprngAlgorithm::CtrDrbg && seed.bytes().size() < CtrDrbg::kSeedLen) {
    throw Error(Errc::SeedTooShort, "ctr-drbg seeds must be at least 256 bits long");
  }
  if (options.reseed.mode == ReseedMode::Interval && (options.reseed.interval == 0 || !options.reseed.entropy)) {
    throw Error(Errc::InvalidArgument, "interval reseeding needs a positive interval and an entropy callback");
  }
  if (!options.provider) throw Error(Errc::InvalidArgument, "no crypto provider");
  options.provider->ensure_self_tested();

  CsprngInstance inst;
  inst.strength_ = strength_bits;
  inst.policy_ = std::move(options.reseed);
  const ByteView bytes = seed.bytes();
  switch (algorithm) {
    case CsprngAlgorithm::Sha256Prng:
      inst.impl_.emplace<Sha256Prng>(options.provider, bytes);
      break;
    case CsprngAlgorithm::HashDrbg:
      inst.impl_.emplace<HashDrbg>(options.provider, bytes, ByteView{}, ByteView{}, options.max_requests_between_reseeds);
      break;
    case CsprngAlgorithm::CtrDrbg:
      inst.impl_.emplace<CtrDrbg>(options.provider, bytes, ByteView{}, options.max_requests_between_reseeds);
      break;
    case CsprngAlgorithm::Fortuna:
      inst.impl_.emplace<Fortuna>(options.provider, bytes, options.fortuna_min_reseed_interval);
      break;
  }
  return inst;
}

void CsprngInstance::require_instantiated() const {
  if (!instantiated()) throw Error(Errc::NotInstantiated, "generator not instantiated");
}

CsprngAlgorithm CsprngInstance::algorithm() const {
  require_instantiated();
  return static_cast<CsprngAlgorithm>(impl_.index() - 1);
}

void CsprngInstance::generate(std::span<std::uint8_t> out) {
  require_instantiated();
  if (out.empty()) throw Error(Errc::InvalidArgument, "requests must ask for at least one byte");
  if (policy_.mode == ReseedMode::Interval && generates_since_reseed_ >= policy_.interval) {
    reseed_unchecked(policy_.entropy(strength_));
  }
  std::visit(
      [&](auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (!std::is_same_v<T, std::monostate>) g.generate(out);
      },
      impl_);
  ++generates_since_reseed_;
}

Bytes CsprngInstance::generate(std::size_t n_bytes) {
  Bytes out(n_bytes);
  generate(out);
  return out;
}

std::uint32_t CsprngInstance::next_u32() {
  std::uint8_t buf[4];
  generate(buf);
  return load_le32(buf);
}

void CsprngInstance::reseed(const SeedMaterial& seed) {
  require_instantiated();
  if (policy_.mode == ReseedMode::Disabled) throw Error(Errc::ReseedDisabled, "reseeding is disabled for this instance");
  reseed_unchecked(seed);
}

void CsprngInstance::reseed_unchecked(const SeedMaterial& seed) {
  if (seed.claimed_entropy_bits() < strength_) {
    throw Error(Errc::InsufficientEntropy, "reseed claims " + std::to_string(seed.claimed_entropy_bits()) +
                                               " bits, strength needs " + std::to_string(strength_));
  }
  const ByteView bytes = seed.bytes();
  std::visit(
      [&](auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, HashDrbg> || std::is_same_v<T, CtrDrbg>) {
          g.reseed(bytes);
        } else if constexpr (!std::is_same_v<T, std::monostate>) {
          g.reseed(bytes);
        }
      },
      impl_);
  generates_since_reseed_ = 0;
}

void CsprngInstance::add_random_event(std::uint8_t source_id, ByteView data) {
  require_instantiated();
  auto* fortuna = std::get_if<Fortuna>(&impl_);
  if (!fortuna) throw Error(Errc::WrongAlgorithm, "random events are only accepted by fortuna");
  fortuna->add_random_event(source_id, data);
}

}  // namespace iotrng::crypto
