// SPDX-License-Identifier: Apache-2.0
#include "iotrng/error.hpp"

namespace iotrng {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroState: return "ZeroState";
    case Errc::StateOutOfRange: return "StateOutOfRange";
    case Errc::NotInitialized: return "NotInitialized";
    case Errc::InsufficientEntropy: return "InsufficientEntropy";
    case Errc::SeedTooShort: return "SeedTooShort";
    case Errc::StrengthTooLow: return "StrengthTooLow";
    case Errc::StrengthUnsupported: return "StrengthUnsupported";
    case Errc::UnknownAlgorithm: return "UnknownAlgorithm";
    case Errc::NotCryptoSecure: return "NotCryptoSecure";
    case Errc::NotInstantiated: return "NotInstantiated";
    case Errc::RequestTooLarge: return "RequestTooLarge";
    case Errc::ReseedRequired: return "ReseedRequired";
    case Errc::ReseedDisabled: return "ReseedDisabled";
    case Errc::WrongAlgorithm: return "WrongAlgorithm";
    case Errc::EventTooLarge: return "EventTooLarge";
    case Errc::SelfTestFailed: return "SelfTestFailed";
    case Errc::EntropyExhausted: return "EntropyExhausted";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::ReadWithoutPowerCycle: return "ReadWithoutPowerCycle";
    case Errc::InvalidClaim: return "InvalidClaim";
    case Errc::SequenceTooShort: return "SequenceTooShort";
    case Errc::PretestFailed: return "PretestFailed";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::TooFewSamples: return "TooFewSamples";
    case Errc::ZeroVariance: return "ZeroVariance";
    case Errc::SourceExhausted: return "SourceExhausted";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::UnknownGenerator: return "UnknownGenerator";
    case Errc::ConcurrentBenchmark: return "ConcurrentBenchmark";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace iotrng
