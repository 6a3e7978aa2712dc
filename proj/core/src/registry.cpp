// SPDX-License-Identifier: Apache-2.0
#include "iotrng/registry.hpp"

#include <cstring>
#include <optional>

#include "iotrng/error.hpp"

namespace iotrng {

std::string_view generator_class_name(GeneratorClass c) noexcept {
  switch (c) {
    case GeneratorClass::GeneralPurpose: return "general-purpose";
    case GeneratorClass::CryptoSecure: return "crypto-secure";
    case GeneratorClass::ReferenceWeak: return "reference-weak";
  }
  return "?";
}

void Generator::fill_words(std::span<std::uint32_t> out) {
  for (std::uint32_t& w : out) w = next_u32();
}

void Generator::fill_bytes(std::span<std::uint8_t> out) {
  std::size_t i = 0;
  for (; i + 4 <= out.size(); i += 4) store_le32(out.data() + i, next_u32());
  if (i < out.size()) {
    std::uint8_t tail[4];
    store_le32(tail, next_u32());
    std::memcpy(out.data() + i, tail, out.size() - i);
  }
}

namespace {

class GpGenerator final : public Generator {
 public:
  GpGenerator(prng::GpVariant v, std::uint64_t seed) : variant_(v), state_(prng::gp_seed(v, seed)) {}
  const GeneratorDescriptor& descriptor() const noexcept override { return prng::descriptor(variant_); }
  std::uint32_t next_u32() override { return prng::gp_next(state_); }

 private:
  prng::GpVariant variant_;
  prng::GpState state_;
};

class CryptoGenerator final : public Generator {
 public:
  explicit CryptoGenerator(crypto::CsprngInstance inst) : inst_(std::move(inst)) {}
  const GeneratorDescriptor& descriptor() const noexcept override { return crypto::descriptor(inst_.algorithm()); }
  std::uint32_t next_u32() override { return inst_.next_u32(); }

 private:
  crypto::CsprngInstance inst_;
};

std::optional<prng::GpVariant> gp_by_name(std::string_view name) {
  for (prng::GpVariant v : prng::kAllGpVariants) {
    if (prng::descriptor(v).name == name) return v;
  }
  return std::nullopt;
}

std::optional<crypto::CsprngAlgorithm> crypto_by_name(std::string_view name) {
  for (crypto::CsprngAlgorithm a : crypto::kAllCsprngAlgorithms) {
    if (crypto::descriptor(a).name == name) return a;
  }
  return std::nullopt;
}

[[noreturn]] void unknown(std::string_view name) {
  throw Error(Errc::UnknownGenerator,
              "unknown generator '" + std::string(name) + "'; valid names: " + generator_name_list());
}

}  // namespace

std::vector<std::string_view> generator_names() {
  std::vector<std::string_view> out;
  for (prng::GpVariant v : prng::kAllGpVariants) out.push_back(prng::descriptor(v).name);
  for (crypto::CsprngAlgorithm a : crypto::kAllCsprngAlgorithms) out.push_back(crypto::descriptor(a).name);
  return out;
}

std::string generator_name_list() {
  std::string s;
  for (std::string_view n : generator_names()) {
    if (!s.empty()) s += ", ";
    s += n;
  }
  return s;
}

const GeneratorDescriptor& find_descriptor(std::string_view name) {
  if (auto v = gp_by_name(name)) return prng::descriptor(*v);
  if (auto a = crypto_by_name(name)) return crypto::descriptor(*a);
  unknown(name);
}

std::unique_ptr<Generator> make_gp_generator(prng::GpVariant variant, std::uint64_t seed) {
  return std::make_unique<GpGenerator>(variant, seed);
}

std::unique_ptr<Generator> make_crypto_generator(crypto::CsprngAlgorithm algorithm, const SeedMaterial& seed,
                                                 unsigned strength_bits, crypto::CsprngOptions options) {
  return std::make_unique<CryptoGenerator>(
      crypto::CsprngInstance::instantiate(algorithm, seed, strength_bits, std::move(options)));
}

std::unique_ptr<Generator> make_generator(std::string_view name, std::uint64_t gp_seed) {
  if (auto v = gp_by_name(name)) return make_gp_generator(*v, gp_seed);
  if (crypto_by_name(name)) {
    throw Error(Errc::InvalidArgument, "'" + std::string(name) + "' needs seed material, not a 64-bit integer");
  }
  unknown(name);
}

std::unique_ptr<Generator> make_generator(std::string_view name, const SeedMaterial& crypto_seed, unsigned strength_bits) {
  if (auto a = crypto_by_name(name)) return make_crypto_generator(*a, crypto_seed, strength_bits);
  if (gp_by_name(name)) {
    throw Error(Errc::NotCryptoSecure, "'" + std::string(name) + "' is not a crypto-secure generator");
  }
  unknown(name);
}

}  // namespace iotrng
