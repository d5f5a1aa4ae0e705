#include "entcost/table.h"

#include <charconv>
#include <string_view>

#include <nlohmann/json.hpp>

namespace entcost {

std::optional<OutputFormat> output_format_from_string(std::string_view s) {
    if (s == "csv") {
        return OutputFormat::Csv;
    }
    if (s == "json") {
        return OutputFormat::Json;
    }
    return std::nullopt;
}

std::string format_double(double value) {
    char buf[32];
    const auto result = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, result.ptr);
}

namespace {

constexpr std::string_view kHeader =
    "kind,protocol,d,p,p_link,p_distill,p_parity,analytic_attempts,simulated_mean,simulated_stderr";

void append_cell(std::string& out, const std::optional<double>& value) {
    out += ',';
    if (value) {
        out += format_double(*value);
    }
}

std::string render_csv(const std::vector<CsvRow>& rows) {
    std::string out{kHeader};
    out += '\n';
    for (const CsvRow& row : rows) {
        out += row.kind;
        out += ',';
        out += row.protocol;
        out += ',';
        if (row.d) {
            out += std::to_string(*row.d);
        }
        append_cell(out, row.p);
        append_cell(out, row.p_link);
        append_cell(out, row.p_distill);
        append_cell(out, row.p_parity);
        append_cell(out, row.analytic_attempts);
        append_cell(out, row.simulated_mean);
        append_cell(out, row.simulated_stderr);
        out += '\n';
    }
    return out;
}

std::string render_json(const std::vector<CsvRow>& rows) {
    std::string out;
    for (const CsvRow& row : rows) {
        nlohmann::ordered_json record;
        record["kind"] = row.kind;
        if (!row.protocol.empty()) {
            record["protocol"] = row.protocol;
        }
        if (row.d) {
            record["d"] = *row.d;
        }
        auto put = [&record](const char* key, const std::optional<double>& value) {
            if (value) {
                record[key] = *value;
            }
        };
        put("p", row.p);
        put("p_link", row.p_link);
        put("p_distill", row.p_distill);
        put("p_parity", row.p_parity);
        put("analytic_attempts", row.analytic_attempts);
        put("simulated_mean", row.simulated_mean);
        put("simulated_stderr", row.simulated_stderr);
        out += record.dump();
        out += '\n';
    }
    return out;
}

}  // namespace

std::string render_table(const std::vector<CsvRow>& rows, OutputFormat format) {
    return format == OutputFormat::Csv ? render_csv(rows) : render_json(rows);
}

}  // namespace entcost
