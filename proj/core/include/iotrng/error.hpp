// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace iotrng {

enum class Errc {
  // generator state
  ZeroState,
  StateOutOfRange,
  NotInitialized,
  // crypto API
  InsufficientEntropy,
  SeedTooShort,
  StrengthTooLow,
  StrengthUnsupported,
  UnknownAlgorithm,
  NotCryptoSecure,
  NotInstantiated,
  RequestTooLarge,
  ReseedRequired,
  ReseedDisabled,
  WrongAlgorithm,
  EventTooLarge,
  SelfTestFailed,
  // entropy
  EntropyExhausted,
  DimensionMismatch,
  LengthMismatch,
  ReadWithoutPowerCycle,
  InvalidClaim,
  // statistics
  SequenceTooShort,
  PretestFailed,
  NotApplicable,
  TooFewSamples,
  ZeroVariance,
  SourceExhausted,
  // configuration
  InvalidArgument,
  UnknownGenerator,
  ConcurrentBenchmark,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace iotrng
