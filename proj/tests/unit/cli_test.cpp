// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#include "octobench_cli/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "octobench/octagon.hpp"
#include "octobench/text_format.hpp"

using octobench::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("octobench_cli_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (const char c : s) {
        n += c == '\n' ? 1 : 0;
    }
    return n;
}

/// Removes OCTOBENCH_SEED for the lifetime of the guard.
struct SeedEnvGuard {
    SeedEnvGuard() { unsetenv("OCTOBENCH_SEED"); }
    ~SeedEnvGuard() { unsetenv("OCTOBENCH_SEED"); }
};

} // namespace

TEST(CliDensityRange, InclusiveSteps) {
    const auto d = octobench::cli::parse_density_range("0.1:0.9:0.1");
    ASSERT_EQ(d.size(), 9U);
    EXPECT_DOUBLE_EQ(d[2], 0.3);
    EXPECT_DOUBLE_EQ(d[8], 0.9);
    EXPECT_EQ(octobench::cli::parse_density_range("0.5:0.5:0.1"), std::vector<double>{0.5});
    EXPECT_EQ(octobench::cli::parse_density_range("0,0.25"), (std::vector<double>{0.0, 0.25}));
}

TEST(CliDensityRange, Malformed) {
    for (const char* bad : {"0.1:0.9", "0.9:0.1:0.1", "0.1:0.9:0", "a:b:c", "0.1:1.5:0.5", "", "0.1:0.9:0.1:2"}) {
        EXPECT_ANY_THROW(octobench::cli::parse_density_range(bad)) << bad;
    }
}

TEST(CliRun, SingleCell) {
    const Result r = invoke({"run", "--ns", "5", "--densities", "0.5:0.5:0.1", "--ops", "join", "--iters", "1",
                             "--warmup", "0", "--format", "csv"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto summary = r.out.substr(r.out.find("op,domain,n,density,mean_ms"));
    EXPECT_EQ(count_lines(summary), 2U); // header + one row
}

TEST(CliRun, DefaultGridHas27Rows) {
    const Result r = invoke({"run", "--ops", "close-full", "--ns", "25,50,100", "--densities", "0.1:0.9:0.1",
                             "--format", "json", "--iters", "1", "--warmup", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["cells"].size(), 27U);
}

TEST(CliRun, UsageErrors) {
    EXPECT_EQ(invoke({"run", "--ops", "nosuch"}).code, 1);
    EXPECT_NE(invoke({"run", "--ops", "nosuch"}).err.find("nosuch"), std::string::npos);
    EXPECT_EQ(invoke({"run", "--densities", "0.9:0.1:0.1"}).code, 1);
    EXPECT_EQ(invoke({"run", "--unknown-flag"}).code, 1);
    EXPECT_EQ(invoke({"run", "--ns", "5", "--out", "/nonexistent-dir/x.csv"}).code, 1);
    EXPECT_EQ(invoke({"run", "--format", "xml"}).code, 1);
    EXPECT_EQ(invoke({"run", "--domain", "zone", "--ops", "forget"}).code, 1);
    EXPECT_EQ(invoke({}).code, 1);
}

TEST(CliRun, HelpListsDefaults) {
    const Result r = invoke({"run", "--help"});
    EXPECT_EQ(r.code, 0);
    for (const char* s : {"--ns", "[25,50,100]", "[0.1:0.9:0.1]", "[42]", "[3]", "[5]", "[close-full]", "[octagon]",
                          "--check", "[console]", "--out", "--batch", "--config"}) {
        EXPECT_NE(r.out.find(s), std::string::npos) << s;
    }
    for (const char* sub : {"generate", "verify", "dfa"}) {
        const Result h = invoke({sub, "--help"});
        EXPECT_EQ(h.code, 0) << sub;
        EXPECT_NE(h.out.find("--config"), std::string::npos) << sub;
    }
    EXPECT_NE(invoke({"dfa", "--help"}).out.find("--widen-delay UINT [3]"), std::string::npos);
    EXPECT_NE(invoke({"verify", "--help"}).out.find("--seeds UINT [100]"), std::string::npos);
}

TEST(CliGenerate, RelatedPairsAndDeterminism) {
    SeedEnvGuard guard;
    const Result a = invoke({"generate", "--n", "10", "--density", "0.5", "--seed", "42"});
    const Result b = invoke({"generate", "--n", "10", "--density", "0.5", "--seed", "42"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    const octobench::Octagon o = octobench::octagon_from_text(a.out);
    EXPECT_EQ(octobench::related_pairs(o), 22U);
    EXPECT_NE(a.out.find("# witness "), std::string::npos);
}

TEST(CliGenerate, DensityZeroIsUnaryOnly) {
    const Result r = invoke({"generate", "--n", "6", "--density", "0", "--seed", "3"});
    ASSERT_EQ(r.code, 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        if (line.rfind('#', 0) == 0) {
            continue;
        }
        EXPECT_EQ(line.find(" - x"), std::string::npos) << line;
        EXPECT_EQ(line.find(" + x"), std::string::npos) << line;
    }
}

TEST(CliGenerate, WritesFileAndZone) {
    const auto path = temp_file("zone.txt");
    const Result r = invoke({"generate", "--n", "4", "--domain", "zone", "--out", path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(slurp(path).rfind("zone n=4", 0), 0U);
    std::filesystem::remove(path);
    EXPECT_EQ(invoke({"generate", "--n", "0"}).code, 1);
    EXPECT_EQ(invoke({"generate", "--density", "1.5"}).code, 1);
}

TEST(CliConfig, FlagsWinThenConfigThenEnv) {
    SeedEnvGuard guard;
    const auto cfg = temp_file("gen.cfg");
    {
        std::ofstream f(cfg);
        f << "# comment\nn = 4\ndensity=1\nseed=7\n";
    }
    const Result from_cfg = invoke({"generate", "--config", cfg.string()});
    const Result explicit_flags = invoke({"generate", "--n", "4", "--density", "1", "--seed", "7"});
    EXPECT_EQ(from_cfg.out, explicit_flags.out);
    const Result flag_wins = invoke({"generate", "--config", cfg.string(), "--n", "3"});
    EXPECT_EQ(flag_wins.out.rfind("oct n=3", 0), 0U);

    setenv("OCTOBENCH_SEED", "9", 1);
    EXPECT_EQ(invoke({"generate", "--n", "4", "--density", "1"}).out,
              invoke({"generate", "--n", "4", "--density", "1", "--seed", "9"}).out);
    // Config beats the environment.
    EXPECT_EQ(invoke({"generate", "--config", cfg.string()}).out, explicit_flags.out);

    {
        std::ofstream f(cfg);
        f << "bogus=1\n";
    }
    EXPECT_EQ(invoke({"generate", "--config", cfg.string()}).code, 1);
    std::filesystem::remove(cfg);
    EXPECT_EQ(invoke({"generate", "--config", "/nonexistent/cfg"}).code, 1);
}

TEST(CliVerify, PassAndMutation) {
    const Result ok = invoke({"verify", "--seeds", "20", "--max-n", "6"});
    EXPECT_EQ(ok.code, 0) << ok.out;
    EXPECT_NE(ok.out.find("total: "), std::string::npos);
    const Result bad = invoke({"verify", "--seeds", "10", "--mutate", "skip-strengthening"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.out.find("FAIL  closure-canonical"), std::string::npos);
    EXPECT_NE(bad.out.find("seed="), std::string::npos);
    const Result oracle = invoke({"verify", "--seeds", "10", "--oracle", "--max-n", "3"});
    EXPECT_EQ(oracle.code, 0) << oracle.out;
    EXPECT_NE(oracle.out.find("oracle-closure"), std::string::npos);
}

TEST(CliDfa, BuiltinsAndReport) {
    const auto report = temp_file("fib.json");
    const Result fib =
        invoke({"dfa", "--program", "builtin:fib", "--closure", "inc-chawdhary", "--report", report.string()});
    ASSERT_EQ(fib.code, 0) << fib.err;
    EXPECT_NE(fib.out.find("invocations:"), std::string::npos);
    EXPECT_NE(fib.out.find("  b in [1, +oo]"), std::string::npos) << fib.out;
    const auto doc = nlohmann::json::parse(slurp(report));
    EXPECT_EQ(doc["closure"], "inc-chawdhary");
    std::filesystem::remove(report);

    const Result full = invoke({"dfa", "--program", "builtin:fib", "--closure", "close-full"});
    const auto exit_part = [](const std::string& s) { return s.substr(s.find("exit invariant:")); };
    EXPECT_EQ(exit_part(full.out), exit_part(fib.out));
    EXPECT_EQ(invoke({"dfa", "--program", "builtin:loop"}).code, 0);
}

TEST(CliDfa, Errors) {
    const auto src = temp_file("bad.prog");
    {
        std::ofstream f(src);
        f << "var x, y;\nx := y *\n";
    }
    const Result r = invoke({"dfa", "--program", src.string()});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find(":2:8:"), std::string::npos) << r.err;
    std::filesystem::remove(src);
    EXPECT_EQ(invoke({"dfa"}).code, 1);
    EXPECT_EQ(invoke({"dfa", "--program", "builtin:loop", "--closure", "join"}).code, 1);
    EXPECT_EQ(invoke({"dfa", "--program", "/nonexistent.prog"}).code, 1);
}
