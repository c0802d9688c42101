// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#include "octobench/harness.hpp"

#include <unistd.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <ctime>
#include <set>
#include <stdexcept>
#include <string>

#include "octobench/generator.hpp"

namespace octobench {

void HarnessConfig::validate() const {
    if (n_set.empty()) {
        throw std::invalid_argument("n_set must not be empty");
    }
    for (const std::size_t n : n_set) {
        if (n == 0) {
            throw std::invalid_argument("variable counts must be at least 1");
        }
    }
    if (density_set.empty()) {
        throw std::invalid_argument("density_set must not be empty");
    }
    for (const double d : density_set) {
        if (!(d > 0.0 && d <= 1.0)) {
            throw std::invalid_argument("densities must lie in (0, 1], got " + std::to_string(d));
        }
    }
    if (measure_iters < 1) {
        throw std::invalid_argument("measure_iters must be at least 1");
    }
    if (batch < 1) {
        throw std::invalid_argument("batch must be at least 1");
    }
    if (ops.empty()) {
        throw std::invalid_argument("at least one op must be selected");
    }
    std::set<OpId> seen;
    for (const OpId op : ops) {
        if (!seen.insert(op).second) {
            throw std::invalid_argument("op '" + std::string(to_string(op)) + "' selected twice");
        }
        if (!domain_supports(domain, op)) {
            throw std::invalid_argument("op '" + std::string(to_string(op)) + "' is not available for domain " +
                                        std::string(to_string(domain)));
        }
    }
}

std::uint64_t cell_seed(std::uint64_t base_seed, std::size_t n, std::size_t density_index) {
    return base_seed ^ mix64((static_cast<std::uint64_t>(n) << 32U) | static_cast<std::uint64_t>(density_index));
}

std::vector<GridCell> expand_grid(const HarnessConfig& config) {
    config.validate();
    std::vector<std::size_t> ns = config.n_set;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    // Density index refers to the ascending position, so seeds do not depend
    // on the order densities were listed in.
    std::vector<double> ds = config.density_set;
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());

    std::vector<GridCell> cells;
    cells.reserve(config.ops.size() * ns.size() * ds.size());
    for (const OpId op : config.ops) {
        for (const std::size_t n : ns) {
            for (std::size_t di = 0; di < ds.size(); ++di) {
                cells.push_back({op, config.domain, n, ds[di], di, cell_seed(config.base_seed, n, di)});
            }
        }
    }
    return cells;
}

SummaryStats summarize(std::span<const std::uint64_t> measure_ns) {
    SummaryStats s;
    s.iters = measure_ns.size();
    if (measure_ns.empty()) {
        return s;
    }
    const auto to_ms = [](double ns) { return ns / 1.0e6; };
    double sum = 0.0;
    double lo = static_cast<double>(measure_ns.front());
    double hi = lo;
    for (const std::uint64_t t : measure_ns) {
        const auto v = static_cast<double>(t);
        sum += v;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double mean = sum / static_cast<double>(measure_ns.size());
    double sq = 0.0;
    for (const std::uint64_t t : measure_ns) {
        const double dv = static_cast<double>(t) - mean;
        sq += dv * dv;
    }
    const double stddev = measure_ns.size() > 1 ? std::sqrt(sq / static_cast<double>(measure_ns.size() - 1)) : 0.0;
    s.mean_ms = to_ms(mean);
    s.stddev_ms = to_ms(stddev);
    s.min_ms = to_ms(lo);
    s.max_ms = to_ms(hi);
    return s;
}

SummaryStats summarize(const Samples& s) { return summarize(std::span<const std::uint64_t>(s.measure_ns)); }

bool BenchReport::any_failed() const noexcept {
    return std::any_of(cells.begin(), cells.end(), [](const CellResult& c) { return c.failed(); });
}

std::uint64_t BenchReport::total_invocations() const noexcept {
    std::uint64_t total = 0;
    for (const auto& c : cells) {
        total += c.invocations;
    }
    return total;
}

std::uint64_t steady_now_ns() {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now().time_since_epoch())
            .count());
}

namespace {

// Sub-stream derivation from a cell seed: +1 sampled constraint,
// +2 second operand, +3 forgotten variable.
constexpr std::uint64_t constraint_stream = 1;
constexpr std::uint64_t operand_stream = 2;
constexpr std::uint64_t forget_stream = 3;

template <typename D>
struct PreparedCell {
    D input;
    std::optional<D> second;
    std::optional<Constraint> constraint;
    std::optional<std::size_t> var;
};

GeneratorParams params_for(const GridCell& cell) {
    GeneratorParams p;
    p.n = cell.n;
    p.density = cell.density;
    p.seed = cell.seed;
    p.domain = cell.domain;
    return p;
}

template <typename D>
D closed_or_throw(const D& state) {
    D closed = DomainTraits<D>::close(state);
    if (DomainTraits<D>::is_bottom(closed)) {
        throw std::runtime_error("generated state closed to bottom");
    }
    return closed;
}

template <typename D>
PreparedCell<D> prepare(const GridCell& cell) {
    const GeneratorParams p = params_for(cell);
    switch (cell.op) {
    case OpId::CloseFull: return {generate<D>(p).state, std::nullopt, std::nullopt, std::nullopt};
    case OpId::Join:
    case OpId::Widen: {
        auto [a, b] = generate_pair<D>(p, mix64(cell.seed + operand_stream));
        return {closed_or_throw(a.state), closed_or_throw(b.state), std::nullopt, std::nullopt};
    }
    case OpId::IncMine:
    case OpId::IncChawdhary:
        if constexpr (std::is_same_v<D, Octagon>) {
            Generated<Octagon> g = generate<Octagon>(p);
            Octagon base = closed_or_throw(g.state);
            Rng rng{mix64(cell.seed + constraint_stream)};
            const Constraint k = sample_tightening_constraint(base, rng, g.witness, p.slack_range);
            return {std::move(base), std::nullopt, k, std::nullopt};
        }
        break;
    case OpId::Forget:
        if constexpr (std::is_same_v<D, Octagon>) {
            Rng rng{mix64(cell.seed + forget_stream)};
            Octagon base = closed_or_throw(generate<Octagon>(p).state);
            return {std::move(base), std::nullopt, std::nullopt, rng.below(cell.n)};
        }
        break;
    }
    throw std::invalid_argument("op '" + std::string(to_string(cell.op)) + "' is not available for domain " +
                                std::string(to_string(cell.domain)));
}

template <typename D>
D invoke(OpId op, const D& in, const D* second, const std::optional<Constraint>& k, std::optional<std::size_t> var) {
    if constexpr (std::is_same_v<D, Octagon>) {
        switch (op) {
        case OpId::CloseFull: return close_full(in);
        case OpId::IncMine: return close_incremental_mine(in, *k);
        case OpId::IncChawdhary: return close_incremental_chawdhary(in, *k);
        case OpId::Join: return join(in, *second);
        case OpId::Widen: return widen(in, *second);
        case OpId::Forget: return forget(in, *var);
        }
    } else {
        switch (op) {
        case OpId::CloseFull: return zone_close(in);
        case OpId::Join: return zone_join(in, *second);
        default: break;
        }
    }
    throw std::invalid_argument("unsupported op");
}

template <typename D>
CellResult run_cell_impl(const GridCell& cell, const HarnessConfig& config, const RunContext& ctx,
                         const CheckRegistry<D>& registry) {
    CellResult r;
    r.cell = cell;
    r.samples.cell = cell;
    std::optional<PreparedCell<D>> prepared;
    try {
        prepared.emplace(prepare<D>(cell));
    } catch (const std::exception& e) {
        r.error = e.what();
        return r;
    }
    const PreparedCell<D>& in = *prepared;
    const std::size_t batch = config.batch;
    const std::size_t total = config.warmup_iters + config.measure_iters;
    std::vector<D> inputs;
    std::vector<D> seconds;
    std::vector<std::optional<D>> outputs(batch);
    const CheckOptions options{config.expensive_checks};

    for (std::size_t iter = 0; iter < total; ++iter) {
        inputs.assign(batch, in.input);
        if (in.second) {
            seconds.assign(batch, *in.second);
        }
        for (auto& o : outputs) {
            o.reset();
        }

        const std::uint64_t start = ctx.clock();
        for (std::size_t b = 0; b < batch; ++b) {
            outputs[b].emplace(invoke<D>(cell.op, inputs[b], in.second ? &seconds[b] : nullptr, in.constraint, in.var));
        }
        const std::uint64_t stop = ctx.clock();

        r.invocations += batch;
        const std::uint64_t elapsed = stop > start ? (stop - start) / batch : 0;
        (iter < config.warmup_iters ? r.samples.warmup_ns : r.samples.measure_ns).push_back(std::max<std::uint64_t>(elapsed, 1));

        if (config.checks_enabled) {
            const CheckContext<D> check_ctx{cell.op,       cell.identity(), inputs[0], in.second ? &seconds[0] : nullptr,
                                            in.constraint, in.var,          *outputs[0]};
            const auto reports = registry.run_checks(check_ctx, options);
            r.checks.add(reports);
            if (r.checks.failed > 0) {
                r.samples.warmup_ns.clear();
                r.samples.measure_ns.clear();
                return r;
            }
        }
    }
    r.summary = summarize(r.samples);
    return r;
}

} // namespace

CellResult run_cell(const GridCell& cell, const HarnessConfig& config, const RunContext& ctx) {
    if (cell.domain == DomainKind::Octagon) {
        static const CheckRegistry<Octagon> builtins = CheckRegistry<Octagon>::with_builtins();
        return run_cell_impl<Octagon>(cell, config, ctx, ctx.octagon_checks ? *ctx.octagon_checks : builtins);
    }
    static const CheckRegistry<ZoneDbm> builtins = CheckRegistry<ZoneDbm>::with_builtins();
    return run_cell_impl<ZoneDbm>(cell, config, ctx, ctx.zone_checks ? *ctx.zone_checks : builtins);
}

BenchReport run_all(const HarnessConfig& config, const RunContext& ctx) {
    BenchReport report;
    report.config = config;
    const std::vector<GridCell> cells = expand_grid(config);
    report.environment = capture_environment();
    const auto wall_start = std::chrono::steady_clock::now();
    report.cells.reserve(cells.size());
    for (const GridCell& cell : cells) {
        report.cells.push_back(run_cell(cell, config, ctx));
        if (ctx.on_cell_done) {
            ctx.on_cell_done(report.cells.back());
        }
    }
    report.total_wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - wall_start).count();
    return report;
}

std::string iso8601_utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::array<char, 32> buf{};
    std::strftime(buf.data(), buf.size(), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf.data();
}

Environment capture_environment() {
    Environment env;
    std::array<char, 256> host{};
    if (gethostname(host.data(), host.size() - 1) == 0) {
        env.host = host.data();
    } else {
        env.host = "unknown";
    }
    // Smallest observable step of the timing clock.
    std::uint64_t best = UINT64_MAX;
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t a = steady_now_ns();
        std::uint64_t b = steady_now_ns();
        while (b == a) {
            b = steady_now_ns();
        }
        best = std::min(best, b - a);
    }
    env.clock_resolution_ns = static_cast<double>(best);
    env.note = "steady_clock timing; CPU frequency scaling and boost are not controlled";
    env.generated_at = iso8601_utc_now();
    return env;
}

} // namespace octobench
