// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <iostream>

int main(int argc, char **argv) {
    std::ios::sync_with_stdio(false);
    return rankgauge::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
