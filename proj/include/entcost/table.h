#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace entcost {

// One output record per (sweep value x protocol/architecture) combination.
// Optional fields render as empty CSV cells / omitted JSON keys.
struct CsvRow {
    std::string kind;
    std::string protocol;  // empty when not applicable
    std::optional<std::int64_t> d;
    std::optional<double> p;  // symmetric depolarizing rate, when given
    std::optional<double> p_link;
    std::optional<double> p_distill;
    std::optional<double> p_parity;
    std::optional<double> analytic_attempts;
    std::optional<double> simulated_mean;
    std::optional<double> simulated_stderr;
};

enum class OutputFormat { Csv, Json };

std::optional<OutputFormat> output_format_from_string(std::string_view s);

// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

// CSV with a fixed header row, or one JSON object per line with the same
// field names. Both are timestamp-free and byte-stable across re-runs.
std::string render_table(const std::vector<CsvRow>& rows, OutputFormat format);

}  // namespace entcost
