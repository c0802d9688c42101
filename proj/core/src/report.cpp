// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#include "octobench/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace octobench {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

void check_sink(std::ostream& out) {
    if (!out) {
        throw std::ios_base::failure("report sink write failed");
    }
}

ordered_json config_json(const HarnessConfig& c) {
    ordered_json j;
    j["ns"] = c.n_set;
    j["densities"] = c.density_set;
    j["seed"] = c.base_seed;
    j["warmup"] = c.warmup_iters;
    j["iters"] = c.measure_iters;
    j["batch"] = c.batch;
    ordered_json ops = ordered_json::array();
    for (const OpId op : c.ops) {
        ops.push_back(std::string(to_string(op)));
    }
    j["ops"] = std::move(ops);
    j["domain"] = std::string(to_string(c.domain));
    j["checks"] = c.checks_enabled;
    j["expensive_checks"] = c.expensive_checks;
    return j;
}

ordered_json cell_json(const CellResult& cell) {
    ordered_json j;
    j["op"] = std::string(to_string(cell.cell.op));
    j["domain"] = std::string(to_string(cell.cell.domain));
    j["n"] = cell.cell.n;
    j["density"] = cell.cell.density;
    j["seed"] = cell.cell.seed;
    j["samples_ns"] = cell.samples.measure_ns;
    j["warmup_ns"] = cell.samples.warmup_ns;
    if (cell.summary) {
        j["mean_ms"] = cell.summary->mean_ms;
        j["stddev_ms"] = cell.summary->stddev_ms;
    }
    ordered_json failures = ordered_json::array();
    if (!cell.error.empty()) {
        failures.push_back(ordered_json{{"check", "prepare"}, {"detail", cell.error}});
    }
    for (const CheckReport& f : cell.checks.failures) {
        failures.push_back(ordered_json{{"check", f.check}, {"detail", f.detail}});
    }
    j["checks"] = ordered_json{{"passed", cell.checks.passed}, {"failed", cell.checks.failed}, {"failures", failures}};
    return j;
}

} // namespace

ReportFormat parse_report_format(std::string_view s) {
    if (s == "csv") {
        return ReportFormat::Csv;
    }
    if (s == "json") {
        return ReportFormat::Json;
    }
    if (s == "console") {
        return ReportFormat::Console;
    }
    throw std::invalid_argument("unknown format '" + std::string(s) + "' (expected csv, json or console)");
}

void write_csv(const BenchReport& r, std::ostream& out) {
    out << csv_raw_header << '\n';
    for (const CellResult& cell : r.cells) {
        const std::string prefix = std::string(to_string(cell.cell.op)) + ',' + std::string(to_string(cell.cell.domain)) +
                                   ',' + std::to_string(cell.cell.n) + ',' + fixed(cell.cell.density, 1) + ',' +
                                   std::to_string(cell.cell.seed) + ',';
        for (std::size_t i = 0; i < cell.samples.warmup_ns.size(); ++i) {
            out << prefix << i << ",warmup," << cell.samples.warmup_ns[i] << '\n';
        }
        for (std::size_t i = 0; i < cell.samples.measure_ns.size(); ++i) {
            out << prefix << i << ",measure," << cell.samples.measure_ns[i] << '\n';
        }
    }
    out << '\n' << csv_summary_header << '\n';
    for (const CellResult& cell : r.cells) {
        out << to_string(cell.cell.op) << ',' << to_string(cell.cell.domain) << ',' << cell.cell.n << ','
            << fixed(cell.cell.density, 1) << ',';
        if (cell.summary) {
            const SummaryStats& s = *cell.summary;
            out << fixed(s.mean_ms, 3) << ',' << fixed(s.stddev_ms, 3) << ',' << fixed(s.min_ms, 3) << ','
                << fixed(s.max_ms, 3) << ',' << s.iters << '\n';
        } else {
            out << "NA,NA,NA,NA,0\n";
        }
    }
    check_sink(out);
}

std::string to_json_string(const BenchReport& r) {
    ordered_json doc;
    doc["config"] = config_json(r.config);
    doc["environment"] = ordered_json{{"host", r.environment.host},
                                      {"clock_resolution_ns", r.environment.clock_resolution_ns},
                                      {"note", r.environment.note},
                                      {"generated_at", r.environment.generated_at}};
    ordered_json cells = ordered_json::array();
    for (const CellResult& cell : r.cells) {
        cells.push_back(cell_json(cell));
    }
    doc["cells"] = std::move(cells);
    doc["total_wall_ms"] = r.total_wall_ms;
    return doc.dump(2) + "\n";
}

void write_json(const BenchReport& r, std::ostream& out) {
    out << to_json_string(r);
    check_sink(out);
}

std::string render_console(const BenchReport& r) {
    std::ostringstream os;
    const HarnessConfig& c = r.config;
    os << "octobench  domain=" << to_string(c.domain) << "  ops=";
    for (std::size_t i = 0; i < c.ops.size(); ++i) {
        os << (i ? "," : "") << to_string(c.ops[i]);
    }
    os << "  grid=" << c.n_set.size() << "x" << c.density_set.size() << "  seed=" << c.base_seed
       << "  warmup=" << c.warmup_iters << "  iters=" << c.measure_iters << "  batch=" << c.batch << '\n';
    os << "host=" << r.environment.host << "  clock_resolution=" << fixed(r.environment.clock_resolution_ns, 0)
       << "ns  (" << r.environment.note << ")\n";

    char line[256];
    std::snprintf(line, sizeof line, "%-14s %-8s %5s %7s %12s %12s %12s %12s %5s  %s\n", "op", "domain", "n",
                  "density", "mean_ms", "stddev_ms", "min_ms", "max_ms", "iters", "status");
    os << line;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t failed_cells = 0;
    for (const CellResult& cell : r.cells) {
        passed += cell.checks.passed;
        failed += cell.checks.failed;
        const std::string op(to_string(cell.cell.op));
        const std::string dom(to_string(cell.cell.domain));
        if (cell.summary) {
            const SummaryStats& s = *cell.summary;
            std::snprintf(line, sizeof line, "%-14s %-8s %5zu %7.1f %12.3f %12.3f %12.3f %12.3f %5zu  ok\n",
                          op.c_str(), dom.c_str(), cell.cell.n, cell.cell.density, s.mean_ms, s.stddev_ms, s.min_ms,
                          s.max_ms, s.iters);
            os << line;
        } else {
            ++failed_cells;
            std::snprintf(line, sizeof line, "%-14s %-8s %5zu %7.1f %12s %12s %12s %12s %5d  FAIL\n", op.c_str(),
                          dom.c_str(), cell.cell.n, cell.cell.density, "-", "-", "-", "-", 0);
            os << line;
            if (!cell.error.empty()) {
                os << "    error: " << cell.error << '\n';
            }
            for (const CheckReport& f : cell.checks.failures) {
                os << "    " << f.check << ": " << f.detail << '\n';
            }
        }
    }
    os << "checks: " << passed << " passed, " << failed << " failed;  cells: " << r.cells.size() - failed_cells
       << " ok, " << failed_cells << " failed;  wall " << fixed(r.total_wall_ms, 1) << " ms\n";
    return os.str();
}

void write_report(const BenchReport& r, ReportFormat format, std::ostream& out) {
    switch (format) {
    case ReportFormat::Csv: write_csv(r, out); break;
    case ReportFormat::Json: write_json(r, out); break;
    case ReportFormat::Console:
        out << render_console(r);
        check_sink(out);
        break;
    }
}

} // namespace octobench
