// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace iotrng::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSuiteFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name. Raw output goes to
/// `out`, diagnostics to `err`; `in` feeds `test --stdin`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace iotrng::cli
