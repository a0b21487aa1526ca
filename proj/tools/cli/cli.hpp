// Copyright 2026 The zenohol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zenohol::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitNumerical = 1,
  kExitUsage = 2,
};

/// Name of the environment variable holding the default output directory.
inline constexpr const char* kOutputDirEnv = "ZENOHOL_OUTPUT_DIR";

/// Parse and dispatch one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zenohol::cli
