#include "markovcast/csv_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <locale>
#include <optional>
#include <sstream>

#include "markovcast/error.hpp"

namespace markovcast {
namespace {

std::vector<std::string> split(const std::string& line, char delimiter) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, delimiter)) {
        const auto first = field.find_first_not_of(" \t\r\"");
        const auto last = field.find_last_not_of(" \t\r\"");
        fields.push_back(first == std::string::npos ? std::string{}
                                                    : field.substr(first, last - first + 1));
    }
    if (!line.empty() && line.back() == delimiter) {
        fields.emplace_back();
    }
    return fields;
}

std::optional<double> parse_number(const std::string& field) {
    if (field.empty()) {
        return std::nullopt;
    }
    std::istringstream in(field);
    in.imbue(std::locale::classic());
    double v = 0.0;
    in >> v;
    if (in.fail() || !in.eof() || !std::isfinite(v)) {
        return std::nullopt;
    }
    return v;
}

bool is_index(std::string_view column) {
    return !column.empty() && std::all_of(column.begin(), column.end(),
                                          [](char c) { return c >= '0' && c <= '9'; });
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) {
        throw Error(ErrorCode::input_not_found, "input file not found: " + path.string(), path.string());
    }
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::io_error, "cannot open " + path.string(), path.string());
    }
    return in;
}

} // namespace

PriceSeries ingest_csv(const std::filesystem::path& path, std::string_view column, char delimiter) {
    auto in = open_input(path);

    std::vector<double> values;
    std::optional<std::size_t> col;
    if (is_index(column)) {
        col = static_cast<std::size_t>(std::stoul(std::string(column)));
    }
    const std::string label = column.empty() ? "last column" : std::string(column);

    std::string line;
    std::size_t line_no = 0;
    bool first_row = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        const auto fields = split(line, delimiter);
        if (first_row) {
            first_row = false;
            if (!column.empty() && !col) {
                const auto it = std::find(fields.begin(), fields.end(), column);
                if (it == fields.end()) {
                    throw Error(ErrorCode::parse_error,
                                "column '" + std::string(column) + "' not found in header",
                                "row " + std::to_string(line_no));
                }
                col = static_cast<std::size_t>(it - fields.begin());
                continue;
            }
            const auto idx = col.value_or(fields.empty() ? 0 : fields.size() - 1);
            if (idx < fields.size() && !parse_number(fields[idx])) {
                // Header row.
                col = idx;
                continue;
            }
        }
        const auto idx = col.value_or(fields.empty() ? 0 : fields.size() - 1);
        col = idx;
        if (idx >= fields.size() || fields[idx].empty()) {
            throw Error(ErrorCode::parse_error,
                        "missing value in " + label + " on row " + std::to_string(line_no),
                        "row " + std::to_string(line_no));
        }
        const auto v = parse_number(fields[idx]);
        if (!v) {
            throw Error(ErrorCode::parse_error,
                        "non-numeric value '" + fields[idx] + "' in " + label + " on row " +
                            std::to_string(line_no),
                        "row " + std::to_string(line_no));
        }
        values.push_back(*v);
    }
    if (values.size() < 2) {
        throw Error(ErrorCode::size_error,
                    "need at least two data rows, found " + std::to_string(values.size()),
                    path.string());
    }
    return PriceSeries(std::move(values), 0, path.filename().string());
}

WeightSet read_weights_csv(const std::filesystem::path& path, char delimiter) {
    auto in = open_input(path);
    WeightSet out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        const auto fields = split(line, delimiter);
        const auto w = fields.size() >= 2 ? parse_number(fields[1]) : std::nullopt;
        if (!w) {
            if (line_no == 1 && fields.size() >= 2) {
                continue; // header
            }
            throw Error(ErrorCode::parse_error, "expected 'label,weight' on row " + std::to_string(line_no),
                        "row " + std::to_string(line_no));
        }
        out.labels.push_back(fields[0]);
        out.weights.push_back(*w);
    }
    if (out.labels.empty()) {
        throw Error(ErrorCode::size_error, "weights file has no rows", path.string());
    }
    return out;
}

std::string format_number(double value) {
    std::ostringstream out;
    out.imbue(std::locale::classic());
    out << std::setprecision(12) << value;
    return out.str();
}

void write_forecast_csv(std::ostream& out, const ForecastResult& result) {
    const auto* lower = result.find(Scenario::lower);
    const auto* upper = result.find(Scenario::upper);
    out << "index";
    if (lower) out << ",lower";
    if (upper) out << ",upper";
    out << ",trend\n";
    for (std::size_t h = 0; h < result.trend_values.size(); ++h) {
        out << result.anchor_index + static_cast<std::int64_t>(h);
        if (lower) out << ',' << format_number(lower->values[h]);
        if (upper) out << ',' << format_number(upper->values[h]);
        out << ',' << format_number(result.trend_values[h]) << '\n';
    }
}

void write_ensemble_csv(std::ostream& out, const EnsembleResult& ensemble) {
    std::vector<std::string> headers;
    std::vector<std::vector<double>> columns;
    for (const auto& m : ensemble.members) {
        headers.push_back("L" + std::to_string(m.learning_length));
        columns.push_back(m.values);
    }
    headers.emplace_back("mean");
    columns.push_back(ensemble.mean);
    headers.emplace_back("std");
    columns.push_back(ensemble.stddev);
    write_columns_csv(out, headers, columns);
}

void write_columns_csv(std::ostream& out, const std::vector<std::string>& headers,
                       const std::vector<std::vector<double>>& columns) {
    if (headers.size() != columns.size()) {
        throw Error(ErrorCode::contract_error, "one header per column is required");
    }
    std::size_t rows = 0;
    for (const auto& c : columns) {
        rows = std::max(rows, c.size());
    }
    out << "index";
    for (const auto& h : headers) {
        out << ',' << h;
    }
    out << '\n';
    for (std::size_t i = 0; i < rows; ++i) {
        out << i;
        for (const auto& c : columns) {
            out << ',';
            if (i < c.size()) {
                out << format_number(c[i]);
            }
        }
        out << '\n';
    }
}

} // namespace markovcast
