// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string_view>

namespace iotrng {

enum class GeneratorClass { GeneralPurpose, CryptoSecure, ReferenceWeak };

std::string_view generator_class_name(GeneratorClass c) noexcept;

/// Static facts about a generator implementation. The crypto API refuses any
/// descriptor whose class is not CryptoSecure.
struct GeneratorDescriptor {
  std::string_view name;
  GeneratorClass klass;
  std::size_t state_bytes;
  unsigned seed_entropy_bits;
  unsigned native_output_bits;
};

}  // namespace iotrng
