// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rhf::cli {

// Process exit codes.
enum ExitCode : int {
  kPass = 0,
  kVerifyFail = 1,
  kUsage = 2,
  kInfeasible = 3,
  kIoError = 4,
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rhf::cli
