// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "octobench/checks.hpp"
#include "octobench/domain.hpp"
#include "octobench/ops.hpp"

namespace octobench {

/// Benchmark configuration. Defaults reproduce the 3 x 9 grid with three
/// warmup and five measured iterations per cell.
struct HarnessConfig {
    std::vector<std::size_t> n_set{25, 50, 100};
    std::vector<double> density_set{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    std::uint64_t base_seed = 42;
    std::size_t warmup_iters = 3;
    std::size_t measure_iters = 5;
    /// Invocations per timing sample; each sample is the batch time divided by this.
    std::size_t batch = 1;
    std::vector<OpId> ops{OpId::CloseFull};
    bool checks_enabled = false;
    /// Enables the O(n^3) incremental-matches-full check.
    bool expensive_checks = false;
    DomainKind domain = DomainKind::Octagon;

    /// Throws std::invalid_argument describing the first violated rule.
    void validate() const;
};

struct GridCell {
    OpId op{OpId::CloseFull};
    DomainKind domain{DomainKind::Octagon};
    std::size_t n{0};
    double density{0.0};
    std::size_t density_index{0};
    std::uint64_t seed{0};

    [[nodiscard]] CellIdentity identity() const { return {op, domain, n, density, seed}; }
    friend bool operator==(const GridCell&, const GridCell&) = default;
};

/// base_seed XOR mix64((n << 32) | density_index). Independent of the op,
/// so every op in a grid sees the same generated state for a given (n, D).
std::uint64_t cell_seed(std::uint64_t base_seed, std::size_t n, std::size_t density_index);

/// Cells ordered by op (config order), then n ascending, then density ascending.
std::vector<GridCell> expand_grid(const HarnessConfig& config);

struct Samples {
    GridCell cell;
    std::vector<std::uint64_t> warmup_ns;
    std::vector<std::uint64_t> measure_ns;
};

struct SummaryStats {
    double mean_ms = 0.0;
    double stddev_ms = 0.0; ///< sample standard deviation; 0 for a single sample
    double min_ms = 0.0;
    double max_ms = 0.0;
    std::size_t iters = 0;
};

/// Statistics over measurement samples only.
SummaryStats summarize(const Samples& s);
SummaryStats summarize(std::span<const std::uint64_t> measure_ns);

struct CellResult {
    GridCell cell;
    Samples samples;
    std::optional<SummaryStats> summary; ///< empty when the cell failed
    CheckTally checks;
    std::uint64_t invocations = 0;
    std::string error; ///< configuration or preparation error, if any

    [[nodiscard]] bool failed() const noexcept { return !summary.has_value(); }
};

struct Environment {
    std::string host;
    double clock_resolution_ns = 0.0;
    std::string note;
    std::string generated_at; ///< ISO-8601 UTC
};

struct BenchReport {
    HarnessConfig config;
    Environment environment;
    std::vector<CellResult> cells;
    double total_wall_ms = 0.0;

    [[nodiscard]] bool any_failed() const noexcept;
    [[nodiscard]] std::uint64_t total_invocations() const noexcept;
};

/// Monotonic nanosecond clock.
using Clock = std::function<std::uint64_t()>;
std::uint64_t steady_now_ns();

/// Hooks for tests and the CLI. Null registries mean the built-in checks.
struct RunContext {
    Clock clock = steady_now_ns;
    const CheckRegistry<Octagon>* octagon_checks = nullptr;
    const CheckRegistry<ZoneDbm>* zone_checks = nullptr;
    std::function<void(const CellResult&)> on_cell_done;
};

/// Generates the cell's inputs, then runs warmup and measured iterations.
/// Input copies are made and checks run outside the timed window.
CellResult run_cell(const GridCell& cell, const HarnessConfig& config, const RunContext& ctx = {});

/// Runs every cell sequentially in grid order.
BenchReport run_all(const HarnessConfig& config, const RunContext& ctx = {});

Environment capture_environment();
std::string iso8601_utc_now();

} // namespace octobench
