// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#include <exception>
#include <iostream>

#include "octobench_cli/cli.hpp"

int main(int argc, char** argv) {
    try {
        return octobench::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "octobench: " << e.what() << '\n';
        return 1;
    }
}
