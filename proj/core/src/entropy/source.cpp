// SPDX-License-Identifier: Apache-2.0
#include "iotrng/entropy/source.hpp"

#include <random>

#if defined(__linux__)
#include <sys/random.h>

#include <cerrno>
#endif

#include "iotrng/error.hpp"

namespace iotrng::entropy {

CallbackSource::CallbackSource(std::string id, std::size_t sample_size, unsigned claimed_bits, SampleFn sample,
                               AvailableFn available)
    : id_(std::move(id)),
      size_(sample_size),
      claimed_(claimed_bits),
      sample_(std::move(sample)),
      available_(std::move(available)) {
  if (size_ == 0) throw Error(Errc::InvalidArgument, "sample size must be positive");
  if (claimed_ > 8 * size_) {
    throw Error(Errc::InvalidClaim, "source '" + id_ + "' claims " + std::to_string(claimed_) + " bits in " +
                                        std::to_string(size_) + " bytes");
  }
  if (!sample_) throw Error(Errc::InvalidArgument, "source '" + id_ + "' has no sampler");
}

Bytes CallbackSource::sample() {
  if (!available()) throw Error(Errc::SourceExhausted, "source '" + id_ + "' is unavailable");
  Bytes out = sample_(size_);
  if (out.size() != size_) {
    throw Error(Errc::LengthMismatch, "source '" + id_ + "' returned " + std::to_string(out.size()) + " bytes");
  }
  return out;
}

namespace {

class HostSource final : public EntropySource {
 public:
  explicit HostSource(std::size_t size) : id_("host"), size_(size) {
    if (size_ == 0) throw Error(Errc::InvalidArgument, "sample size must be positive");
#if defined(__linux__)
    std::uint8_t probe;
    use_getrandom_ = getrandom(&probe, 1, GRND_NONBLOCK) == 1;
#endif
    if (!use_getrandom_) {
      try {
        device_ = std::make_unique<std::random_device>();
      } catch (const std::exception&) {
        available_ = false;
      }
    }
  }

  const std::string& id() const noexcept override { return id_; }
  std::size_t sample_size() const noexcept override { return size_; }
  unsigned claimed_bits_per_sample() const noexcept override { return static_cast<unsigned>(8 * size_); }
  bool available() const override { return available_; }

  Bytes sample() override {
    if (!available_) throw Error(Errc::SourceExhausted, "host randomness is unavailable");
    Bytes out(size_);
#if defined(__linux__)
    if (use_getrandom_) {
      std::size_t done = 0;
      while (done < size_) {
        const ssize_t r = getrandom(out.data() + done, size_ - done, 0);
        if (r < 0) {
          if (errno == EINTR) continue;
          available_ = false;
          throw Error(Errc::SourceExhausted, "getrandom failed");
        }
        done += static_cast<std::size_t>(r);
      }
      return out;
    }
#endif
    for (std::size_t i = 0; i < size_; i += 4) {
      std::uint8_t w[4];
      store_le32(w, (*device_)());
      for (std::size_t j = 0; j < 4 && i + j < size_; ++j) out[i + j] = w[j];
    }
    return out;
  }

 private:
  std::string id_;
  std::size_t size_;
  bool use_getrandom_ = false;
  bool available_ = true;
  std::unique_ptr<std::random_device> device_;
};

}  // namespace

std::unique_ptr<EntropySource> host_entropy_source(std::size_t sample_size) {
  return std::make_unique<HostSource>(sample_size);
}

}  // namespace iotrng::entropy
