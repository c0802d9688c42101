// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#include "octobench_cli/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "octobench/dfa.hpp"
#include "octobench/generator.hpp"
#include "octobench/harness.hpp"
#include "octobench/report.hpp"
#include "octobench/text_format.hpp"
#include "octobench/verify.hpp"

namespace octobench::cli {

namespace {

/// Raised for bad flag values found after CLI11 parsing.
struct UsageProblem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

double parse_double(const std::string& s, const char* what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (s.empty() || used != s.size() || !std::isfinite(v)) {
        throw UsageProblem(std::string("malformed ") + what + " '" + s + "'");
    }
    return v;
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
        v = std::stoull(s, &used, 0);
    } catch (const std::exception&) {
        used = 0;
    }
    if (s.empty() || s[0] == '-' || used != s.size()) {
        throw UsageProblem(std::string("malformed ") + what + " '" + s + "'");
    }
    return v;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
    std::vector<std::size_t> out;
    for (const std::string& part : split(text, ',')) {
        out.push_back(static_cast<std::size_t>(parse_u64(part, "size list entry")));
    }
    return out;
}

std::vector<OpId> parse_ops(const std::string& text) {
    std::vector<OpId> out;
    for (const std::string& part : split(text, ',')) {
        try {
            out.push_back(parse_op(part));
        } catch (const std::invalid_argument& e) {
            throw UsageProblem(e.what());
        }
    }
    return out;
}

/// key=value lines; '#' starts a comment line.
std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageProblem("cannot read config file '" + path + "'");
    }
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') {
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw UsageProblem(path + ":" + std::to_string(lineno) + ": expected key=value");
        }
        std::string key = trim(std::string_view(t).substr(0, eq));
        if (key.rfind("--", 0) == 0) {
            key.erase(0, 2);
        }
        out.emplace_back(key, trim(std::string_view(t).substr(eq + 1)));
    }
    return out;
}

/// Fills options not given on the command line from the config file,
/// then falls back to OCTOBENCH_SEED for `seed_flag`.
void apply_config_and_env(CLI::App& sub, const std::string& config_path, const char* seed_flag) {
    if (!config_path.empty()) {
        for (const auto& [key, value] : read_config(config_path)) {
            CLI::Option* opt = key == "config" || key == "help" ? nullptr : sub.get_option_no_throw("--" + key);
            if (opt == nullptr) {
                throw UsageProblem("unknown config key '" + key + "' for " + sub.get_name());
            }
            if (opt->count() == 0) {
                opt->add_result(value);
                opt->run_callback();
            }
        }
    }
    if (seed_flag == nullptr) {
        return;
    }
    CLI::Option* seed = sub.get_option(seed_flag);
    if (seed->count() == 0) {
        if (const char* env = std::getenv("OCTOBENCH_SEED"); env != nullptr && *env != '\0') {
            seed->add_result(trim(env));
            seed->run_callback();
        }
    }
}

std::ostream& open_sink(const std::string& path, std::ofstream& file, std::ostream& fallback) {
    if (path.empty() || path == "-") {
        return fallback;
    }
    file.open(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw UsageProblem("cannot write output file '" + path + "'");
    }
    return file;
}

// ------------------------------------------------------------- subcommands

struct RunFlags {
    std::string ns = "25,50,100";
    std::string densities = "0.1:0.9:0.1";
    std::uint64_t seed = 42;
    std::size_t warmup = 3;
    std::size_t iters = 5;
    std::string ops = "close-full";
    std::string domain = "octagon";
    bool check = false;
    std::string format = "console";
    std::string out;
    std::size_t batch = 1;
    std::string config;
};

int do_run(const RunFlags& f, std::ostream& out, std::ostream& err) {
    HarnessConfig config;
    config.n_set = parse_sizes(f.ns);
    config.density_set = parse_density_range(f.densities);
    config.base_seed = f.seed;
    config.warmup_iters = f.warmup;
    config.measure_iters = f.iters;
    config.ops = parse_ops(f.ops);
    config.checks_enabled = f.check;
    config.batch = f.batch;
    ReportFormat format{};
    try {
        config.domain = parse_domain_kind(f.domain);
        format = parse_report_format(f.format);
        config.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageProblem(e.what());
    }
    std::ofstream file;
    std::ostream& sink = open_sink(f.out, file, out);
    const BenchReport report = run_all(config);
    write_report(report, format, sink);
    sink.flush();
    if (report.any_failed()) {
        err << "octobench: one or more cells failed their checks\n";
        return CheckFailure;
    }
    return Ok;
}

struct GenerateFlags {
    std::size_t n = 10;
    double density = 0.5;
    std::uint64_t seed = 42;
    std::string domain = "octagon";
    std::string out;
    std::string config;
};

int do_generate(const GenerateFlags& f, std::ostream& out) {
    GeneratorParams p;
    p.n = f.n;
    p.density = f.density;
    p.seed = f.seed;
    DomainKind domain{};
    try {
        domain = parse_domain_kind(f.domain);
        p.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageProblem(e.what());
    }
    std::string text;
    std::vector<std::int64_t> witness;
    if (domain == DomainKind::Octagon) {
        auto g = generate_octagon(p);
        text = to_text(g.state);
        witness = std::move(g.witness);
    } else {
        auto g = generate_zone(p);
        text = to_text(g.state);
        witness = std::move(g.witness);
    }
    std::ofstream file;
    std::ostream& sink = open_sink(f.out, file, out);
    sink << text << "# witness";
    for (const std::int64_t v : witness) {
        sink << ' ' << v;
    }
    sink << '\n';
    sink.flush();
    return Ok;
}

struct VerifyFlags {
    std::size_t seeds = 100;
    std::size_t max_n = 8;
    std::uint64_t seed = 42;
    bool oracle = false;
    std::string mutate = "none";
    std::string config;
};

int do_verify(const VerifyFlags& f, std::ostream& out) {
    VerifyOptions opt;
    opt.seeds = f.seeds;
    opt.max_n = f.max_n;
    opt.base_seed = f.seed;
    opt.oracle = f.oracle;
    opt.fault = f.mutate == "skip-strengthening" ? ClosureFault::SkipStrengthening : ClosureFault::None;
    if (f.seeds == 0 || f.max_n < 2) {
        throw UsageProblem("--seeds must be positive and --max-n at least 2");
    }
    const VerifyReport r = run_verify(opt);
    out << render_verify(r);
    return r.all_passed() ? Ok : CheckFailure;
}

struct DfaFlags {
    std::string program;
    std::string closure = "close-full";
    std::size_t widen_delay = 3;
    std::string report;
    std::string config;
};

int do_dfa(const DfaFlags& f, std::ostream& out) {
    if (f.program.empty()) {
        throw UsageProblem("--program is required");
    }
    dfa::AnalysisOptions opt;
    try {
        opt.closure = parse_op(f.closure);
    } catch (const std::invalid_argument& e) {
        throw UsageProblem(e.what());
    }
    if (!is_closure_op(opt.closure)) {
        throw UsageProblem("--closure must be close-full, inc-mine or inc-chawdhary");
    }
    opt.widen_delay = f.widen_delay;
    std::string source;
    try {
        source = dfa::load_program_text(f.program);
    } catch (const std::exception& e) {
        throw UsageProblem(e.what());
    }
    dfa::Program program;
    try {
        program = dfa::parse_program(source);
    } catch (const ParseError& e) {
        throw UsageProblem(f.program + ":" + e.what());
    }
    const dfa::Analysis a = dfa::analyze(dfa::build_cfg(program), opt);
    std::ofstream file;
    if (!f.report.empty()) {
        open_sink(f.report, file, out) << dfa::to_json(program, a, opt, f.program);
    }
    out << "program: " << f.program << '\n' << dfa::render_summary(program, a, opt);
    return Ok;
}

} // namespace

std::vector<double> parse_density_range(std::string_view text) {
    const std::string t = trim(text);
    std::vector<double> out;
    if (t.find(':') == std::string::npos) {
        for (const std::string& part : split(t, ',')) {
            out.push_back(parse_double(part, "density"));
        }
    } else {
        const auto parts = split(t, ':');
        if (parts.size() != 3) {
            throw UsageProblem("malformed density range '" + t + "' (expected start:end:step)");
        }
        const double start = parse_double(parts[0], "density range start");
        const double end = parse_double(parts[1], "density range end");
        const double step = parse_double(parts[2], "density range step");
        if (step <= 0.0 || end < start) {
            throw UsageProblem("malformed density range '" + t + "' (need step > 0 and end >= start)");
        }
        const auto count = static_cast<std::size_t>(std::floor((end - start) / step + 1e-9)) + 1;
        for (std::size_t k = 0; k < count; ++k) {
            // Round away accumulated binary error: 0.1 + 2 * 0.1 -> 0.3.
            out.push_back(std::round((start + static_cast<double>(k) * step) * 1e9) / 1e9);
        }
    }
    for (const double d : out) {
        if (d < 0.0 || d > 1.0) {
            throw UsageProblem("density " + std::to_string(d) + " outside [0, 1]");
        }
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Benchmark and verification driver for octagon closure algorithms", "octobench"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "octobench 0.1.0");

    RunFlags rf;
    CLI::App* run_cmd = app.add_subcommand("run", "Time operations over an (op, n, density) grid");
    run_cmd->add_option("--ns", rf.ns, "Comma-separated variable counts")->capture_default_str();
    run_cmd->add_option("--densities", rf.densities, "Density range start:end:step (inclusive) or comma list")
        ->capture_default_str();
    run_cmd->add_option("--seed", rf.seed, "Base seed (env OCTOBENCH_SEED as last resort)")->capture_default_str();
    run_cmd->add_option("--warmup", rf.warmup, "Warmup iterations per cell")->capture_default_str();
    run_cmd->add_option("--iters", rf.iters, "Measured iterations per cell")->capture_default_str();
    run_cmd->add_option("--ops", rf.ops, "close-full,inc-mine,inc-chawdhary,join,forget,widen")->capture_default_str();
    run_cmd->add_option("--domain", rf.domain, "octagon or zone")->capture_default_str();
    run_cmd->add_flag("--check", rf.check, "Run correctness checks after every invocation");
    run_cmd->add_option("--format", rf.format, "csv, json or console")->capture_default_str();
    run_cmd->add_option("--out", rf.out, "Output file (default stdout)");
    run_cmd->add_option("--batch", rf.batch, "Invocations per timing sample")->capture_default_str();
    run_cmd->add_option("--config", rf.config, "key=value file; flags win");

    GenerateFlags gf;
    CLI::App* gen_cmd = app.add_subcommand("generate", "Write one seeded synthetic state in text form");
    gen_cmd->add_option("--n", gf.n, "Number of variables")->capture_default_str();
    gen_cmd->add_option("--density", gf.density, "Fraction of related variable pairs")->capture_default_str();
    gen_cmd->add_option("--seed", gf.seed, "Seed (env OCTOBENCH_SEED as last resort)")->capture_default_str();
    gen_cmd->add_option("--domain", gf.domain, "octagon or zone")->capture_default_str();
    gen_cmd->add_option("--out", gf.out, "Output file (default stdout)");
    gen_cmd->add_option("--config", gf.config, "key=value file; flags win");

    VerifyFlags vf;
    CLI::App* ver_cmd = app.add_subcommand("verify", "Run the untimed property suite");
    ver_cmd->add_option("--seeds", vf.seeds, "Number of random seeds")->capture_default_str();
    ver_cmd->add_option("--max-n", vf.max_n, "Largest variable count")->capture_default_str();
    ver_cmd->add_option("--seed", vf.seed, "First seed (env OCTOBENCH_SEED as last resort)")->capture_default_str();
    ver_cmd->add_flag("--oracle", vf.oracle, "Add integer enumeration properties for n <= 3");
    ver_cmd->add_option("--mutate", vf.mutate, "Inject a closure fault: none or skip-strengthening")
        ->check(CLI::IsMember({"none", "skip-strengthening"}))
        ->capture_default_str();
    ver_cmd->add_option("--config", vf.config, "key=value file; flags win");

    DfaFlags df;
    CLI::App* dfa_cmd = app.add_subcommand("dfa", "Analyze a small program with the octagon domain");
    dfa_cmd->add_option("--program", df.program, "PATH, builtin:loop or builtin:fib");
    dfa_cmd->add_option("--closure", df.closure, "close-full, inc-mine or inc-chawdhary")->capture_default_str();
    dfa_cmd->add_option("--widen-delay", df.widen_delay, "Joins at a loop head before widening")
        ->capture_default_str();
    dfa_cmd->add_option("--report", df.report, "Write a JSON report to PATH");
    dfa_cmd->add_option("--config", df.config, "key=value file; flags win");

    std::vector<std::string> argv_store{"octobench"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (std::string& s : argv_store) {
        argv.push_back(s.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : UsageError;
    }

    try {
        if (run_cmd->parsed()) {
            apply_config_and_env(*run_cmd, rf.config, "--seed");
            return do_run(rf, out, err);
        }
        if (gen_cmd->parsed()) {
            apply_config_and_env(*gen_cmd, gf.config, "--seed");
            return do_generate(gf, out);
        }
        if (ver_cmd->parsed()) {
            apply_config_and_env(*ver_cmd, vf.config, "--seed");
            return do_verify(vf, out);
        }
        apply_config_and_env(*dfa_cmd, df.config, nullptr);
        return do_dfa(df, out);
    } catch (const UsageProblem& e) {
        err << "octobench: " << e.what() << "\nRun with --help for usage.\n";
        return UsageError;
    } catch (const CLI::Error& e) {
        err << "octobench: " << e.what() << '\n';
        return UsageError;
    }
}

} // namespace octobench::cli
