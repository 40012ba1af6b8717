// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rankgauge::cli {

enum ExitCode : int {
    kSuccess            = 0,
    kInputError         = 2,
    kOptimizationFailed = 3,
    kUsageError         = 4,
};

/// Entry point of the `rankgauge` tool. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace rankgauge::cli
