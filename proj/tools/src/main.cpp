// SPDX-License-Identifier: Apache-2.0
#include <csignal>
#include <iostream>

#include "iotrng_cli/cli.hpp"

int main(int argc, char** argv) {
  // export writes until the reader hangs up; a closed pipe is a normal end.
  std::signal(SIGPIPE, SIG_IGN);
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv + 1, argv + argc);
  const int rc = iotrng::cli::run_cli(args, std::cin, std::cout, std::cerr);
  std::cout.flush();
  return rc;
}
