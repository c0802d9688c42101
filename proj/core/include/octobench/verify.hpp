// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once
// Untimed property suite behind `octobench verify`.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "octobench/octagon.hpp"

namespace octobench {

struct VerifyOptions {
    std::size_t seeds = 100;
    /// Largest variable count drawn for generated instances (at least 2).
    std::size_t max_n = 8;
    std::uint64_t base_seed = 42;
    /// Adds integer-point enumeration properties on small instances (n <= 3).
    bool oracle = false;
    /// Fault injected into the closure under test.
    ClosureFault fault = ClosureFault::None;
};

struct PropertyFailure {
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::string detail;
};

struct PropertyResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    /// First few failures only.
    std::vector<PropertyFailure> failures;
};

struct VerifyReport {
    VerifyOptions options;
    std::vector<PropertyResult> properties;

    [[nodiscard]] std::size_t total_passed() const noexcept;
    [[nodiscard]] std::size_t total_failed() const noexcept;
    [[nodiscard]] bool all_passed() const noexcept { return total_failed() == 0; }
    [[nodiscard]] const PropertyResult* find(const std::string& name) const noexcept;
};

VerifyReport run_verify(const VerifyOptions& options);
std::string render_verify(const VerifyReport& report);

} // namespace octobench
