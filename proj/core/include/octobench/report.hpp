// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "octobench/harness.hpp"

namespace octobench {

enum class ReportFormat : std::uint8_t { Csv, Json, Console };

/// Accepts "csv", "json" and "console".
ReportFormat parse_report_format(std::string_view s);

inline constexpr std::string_view csv_raw_header = "op,domain,n,density,seed,iteration,phase,time_ns";
inline constexpr std::string_view csv_summary_header = "op,domain,n,density,mean_ms,stddev_ms,min_ms,max_ms,iters";

/// Raw-sample table, a blank line, then the summary table. Failed cells get
/// a summary row with NA statistics and iters 0. Throws std::ios_base::failure
/// if the sink goes bad.
void write_csv(const BenchReport& r, std::ostream& out);

/// One JSON document with a fixed key order.
void write_json(const BenchReport& r, std::ostream& out);
std::string to_json_string(const BenchReport& r);

/// Aligned summary table with a check tally footer.
std::string render_console(const BenchReport& r);

void write_report(const BenchReport& r, ReportFormat format, std::ostream& out);

} // namespace octobench
