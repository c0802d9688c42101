// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#include "octobench/checks.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "octobench/generator.hpp"
#include "octobench/harness.hpp"
#include "test_support.hpp"

using namespace octobench;
using octobench::testing::build;

namespace {

CellIdentity some_cell(OpId op) { return {op, DomainKind::Octagon, 2, 0.5, 7}; }

std::vector<std::string> failed_names(const std::vector<CheckReport>& reports) {
    std::vector<std::string> out;
    for (const auto& r : reports) {
        if (r.verdict == Verdict::Fail) {
            out.push_back(r.check);
        }
    }
    return out;
}

} // namespace

TEST(CheckRegistry, DuplicateNameRejected) {
    CheckRegistry<Octagon> r = CheckRegistry<Octagon>::with_builtins();
    CheckSpec<Octagon> spec{"coherent", {OpId::Join}, [](const CheckContext<Octagon>&) { return std::nullopt; }};
    EXPECT_THROW(r.register_check(spec), DuplicateCheckError);
    spec.name = "fresh";
    EXPECT_NO_THROW(r.register_check(spec));
    EXPECT_THROW(r.register_check(spec), DuplicateCheckError);
}

TEST(CheckRegistry, BuiltinsPresentForBothDomains) {
    const auto oct = CheckRegistry<Octagon>::with_builtins().names();
    const std::set<std::string> names(oct.begin(), oct.end());
    for (const char* n : {"coherent", "zero-diagonal", "not-bottom", "closure-tightens", "closure-idempotent",
                          "closure-canonical", "incremental-matches-full", "join-upper-bound", "forget-clears-var"}) {
        EXPECT_TRUE(names.contains(n)) << n;
    }
    EXPECT_GE(CheckRegistry<ZoneDbm>::with_builtins().size(), 6U);
}

TEST(CheckRegistry, FullClosureOfGeneratedStatePasses) {
    const auto registry = CheckRegistry<Octagon>::with_builtins();
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        GeneratorParams p;
        p.n = 8;
        p.seed = seed;
        const Octagon in = generate_octagon(p).state;
        const Octagon out = close_full(in);
        const auto reports =
            registry.run_checks({OpId::CloseFull, some_cell(OpId::CloseFull), in, nullptr, {}, {}, out});
        EXPECT_FALSE(reports.empty());
        EXPECT_TRUE(failed_names(reports).empty());
    }
}

TEST(CheckRegistry, SkippedStrengtheningCaughtByCanonicalCheck) {
    const Octagon in = build(2, {Constraint::upper(0, 2), Constraint::upper(1, 3)});
    const Octagon bad = close_full_faulty(in, ClosureFault::SkipStrengthening);
    ASSERT_TRUE(bad.is_closed());
    const auto reports = CheckRegistry<Octagon>::with_builtins().run_checks(
        {OpId::CloseFull, some_cell(OpId::CloseFull), in, nullptr, {}, {}, bad});
    const auto failed = failed_names(reports);
    EXPECT_NE(std::find(failed.begin(), failed.end(), "closure-canonical"), failed.end());
    for (const auto& r : reports) {
        if (r.verdict == Verdict::Fail) {
            EXPECT_NE(r.detail.find("seed=7"), std::string::npos);
        }
    }
}

TEST(CheckRegistry, BottomFromConsistentInputFails) {
    const Octagon in = build(2, {Constraint::upper(0, 2)});
    const auto reports = CheckRegistry<Octagon>::with_builtins().run_checks(
        {OpId::CloseFull, some_cell(OpId::CloseFull), in, nullptr, {}, {}, Octagon::bottom(2)});
    const auto failed = failed_names(reports);
    EXPECT_EQ(failed, std::vector<std::string>{"not-bottom"});
}

TEST(CheckRegistry, ForgetLeavingFiniteEntryFails) {
    const Octagon in = close_full(build(2, {Constraint::upper(0, 2), Constraint::upper(1, 3)}));
    const auto reports = CheckRegistry<Octagon>::with_builtins().run_checks(
        {OpId::Forget, some_cell(OpId::Forget), in, nullptr, {}, std::size_t{0}, in});
    const auto failed = failed_names(reports);
    EXPECT_NE(std::find(failed.begin(), failed.end(), "forget-clears-var"), failed.end());
}

TEST(CheckRegistry, JoinBelowOperandFails) {
    const Octagon a = close_full(build(1, {Constraint::upper(0, 2)}));
    const Octagon b = close_full(build(1, {Constraint::upper(0, 5)}));
    const auto reports = CheckRegistry<Octagon>::with_builtins().run_checks(
        {OpId::Join, some_cell(OpId::Join), a, &b, {}, {}, a});
    EXPECT_EQ(failed_names(reports), std::vector<std::string>{"join-upper-bound"});
}

TEST(CheckRegistry, ExpensiveCheckOnlyWhenEnabled) {
    const Octagon base = close_full(build(3, {Constraint::upper(0, 2), Constraint::diff(0, 1, 1)}));
    const Constraint k = Constraint::diff(1, 2, 0);
    const Octagon wrong = close_full(base); // ignores k
    const auto registry = CheckRegistry<Octagon>::with_builtins();
    const CheckContext<Octagon> ctx{OpId::IncMine, some_cell(OpId::IncMine), base, nullptr, k, {}, wrong};
    const auto cheap = failed_names(registry.run_checks(ctx));
    EXPECT_EQ(std::find(cheap.begin(), cheap.end(), "incremental-matches-full"), cheap.end());
    const auto full = failed_names(registry.run_checks(ctx, CheckOptions{true}));
    EXPECT_NE(std::find(full.begin(), full.end(), "incremental-matches-full"), full.end());
}

TEST(CheckRegistry, ChecksDoNotMutateStates) {
    GeneratorParams p;
    p.n = 6;
    const Octagon in = generate_octagon(p).state;
    const Octagon out = close_full(in);
    const Octagon in_copy = in;
    const Octagon out_copy = out;
    (void)CheckRegistry<Octagon>::with_builtins().run_checks(
        {OpId::CloseFull, some_cell(OpId::CloseFull), in, nullptr, {}, {}, out}, CheckOptions{true});
    EXPECT_EQ(in, in_copy);
    EXPECT_EQ(out, out_copy);
}

TEST(CheckRegistry, UserCheckRunsOnlyOnJoinCells) {
    auto registry = CheckRegistry<Octagon>::with_builtins();
    std::set<std::uint64_t> cells_seen;
    std::size_t calls = 0;
    registry.register_check({"count-joins", {OpId::Join}, [&](const CheckContext<Octagon>& ctx) {
                                 EXPECT_EQ(ctx.op, OpId::Join);
                                 cells_seen.insert(ctx.cell.seed);
                                 ++calls;
                                 return std::optional<std::string>{};
                             }});
    HarnessConfig config;
    config.n_set = {4, 6};
    config.density_set = {0.3, 0.6};
    config.ops = {OpId::CloseFull, OpId::Join};
    config.warmup_iters = 1;
    config.measure_iters = 2;
    config.checks_enabled = true;
    RunContext ctx;
    ctx.octagon_checks = &registry;
    const BenchReport report = run_all(config, ctx);
    EXPECT_EQ(report.cells.size(), 8U);
    EXPECT_FALSE(report.any_failed());
    EXPECT_EQ(cells_seen.size(), 4U);
    EXPECT_EQ(calls, 4U * 3U);
}

TEST(CheckRegistry, FailingCheckAbortsCellAndDiscardsSamples) {
    auto registry = CheckRegistry<Octagon>::with_builtins();
    registry.register_check({"always-fails", {OpId::CloseFull}, [](const CheckContext<Octagon>&) {
                                 return std::optional<std::string>{"injected"};
                             }});
    HarnessConfig config;
    config.n_set = {5};
    config.density_set = {0.5};
    config.checks_enabled = true;
    RunContext ctx;
    ctx.octagon_checks = &registry;
    const BenchReport report = run_all(config, ctx);
    ASSERT_EQ(report.cells.size(), 1U);
    const CellResult& cell = report.cells.front();
    EXPECT_TRUE(cell.failed());
    EXPECT_TRUE(cell.samples.measure_ns.empty());
    EXPECT_TRUE(cell.samples.warmup_ns.empty());
    ASSERT_EQ(cell.checks.failures.size(), 1U);
    EXPECT_EQ(cell.checks.failures.front().check, "always-fails");
    EXPECT_EQ(cell.checks.failures.front().cell.seed, cell.cell.seed);
}

TEST(CheckRegistry, ChecksStayOutsideTimedRegion) {
    HarnessConfig config;
    config.n_set = {30};
    config.density_set = {0.5};
    config.warmup_iters = 5;
    config.measure_iters = 40;
    config.expensive_checks = true;
    const auto run = [&](bool checks) {
        HarnessConfig c = config;
        c.checks_enabled = checks;
        const BenchReport r = run_all(c);
        EXPECT_FALSE(r.any_failed());
        return *r.cells.front().summary;
    };
    (void)run(false);
    const SummaryStats off = run(false);
    const SummaryStats on = run(true);
    const double spread = 3.0 * std::sqrt(on.stddev_ms * on.stddev_ms + off.stddev_ms * off.stddev_ms);
    EXPECT_LE(std::fabs(on.mean_ms - off.mean_ms), std::max(spread, 0.05 * off.mean_ms))
        << "on " << on.mean_ms << " off " << off.mean_ms;
}
