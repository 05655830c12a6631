// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. run_cli() is the whole program minus main(), so
// tests can drive it in-process and inspect the emitted JSON.

#ifndef TLAB_TOOLS_CLI_HPP_
#define TLAB_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace tlab::cli {

enum ExitCode : int {
  kOk = 0,
  kArgumentError = 2,
  kIoError = 3,
  kVerificationFailure = 4,
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

// 64-bit FNV-1a, used to address the result cache.
uint64_t fnv1a64(std::string_view bytes);

}  // namespace tlab::cli

#endif  // TLAB_TOOLS_CLI_HPP_
