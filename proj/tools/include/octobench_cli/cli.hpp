// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace octobench::cli {

enum ExitCode : int { Ok = 0, UsageError = 1, CheckFailure = 2 };

/// Parses "start:end:step" (inclusive) or a comma list of densities.
std::vector<double> parse_density_range(std::string_view text);

/// args excludes the program name. Never calls std::exit.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace octobench::cli
