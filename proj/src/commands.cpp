#include "markovcast/commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "markovcast/config.hpp"
#include "markovcast/csv_io.hpp"
#include "markovcast/error.hpp"
#include "markovcast/eval.hpp"
#include "markovcast/json_io.hpp"
#include "markovcast/multiscale.hpp"

namespace markovcast {
namespace {

namespace fs = std::filesystem;

struct Options {
    std::string input;
    std::string column;
    std::string delimiter = ",";
    std::string config_path;
    std::string out;
    std::string diagnostics;
    std::string learning_lengths;
    std::string weights;
    // Forecast settings as given on the command line; only the flags that
    // were actually passed override the config file.
    std::vector<std::pair<std::string, std::string>> settings;
};

struct SettingFlag {
    const char* flag;
    const char* key;
    const char* help;
};

constexpr SettingFlag kSettingFlags[] = {
    {"--states", "states", "number of states s"},
    {"--order", "order", "Markov chain order r"},
    {"--delta", "delta", "candidate probability threshold"},
    {"--nmin", "nmin", "minimal history count before back-off"},
    {"--horizon", "horizon", "forecast horizon in base steps"},
    {"--hierarchy", "hierarchy", "pow2 | smooth"},
    {"--returns", "returns", "abs | rel"},
    {"--quantizer", "quantizer", "count | width | combined"},
    {"--combined-k", "combined-k", "sigma multiplier for the combined quantizer"},
    {"--scenario", "scenario", "lower | upper | both"},
    {"--center", "center", "median | middle"},
};

std::string read_file(const fs::path& path) {
    std::error_code ec;
    if (!fs::is_regular_file(path, ec)) {
        throw Error(ErrorCode::input_not_found, "file not found: " + path.string(), path.string());
    }
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

char delimiter_of(const Options& o) {
    if (o.delimiter == "\\t" || o.delimiter == "tab") {
        return '\t';
    }
    if (o.delimiter.size() != 1) {
        throw Error(ErrorCode::usage_error, "delimiter must be a single character", "--delimiter");
    }
    return o.delimiter[0];
}

ForecastConfig resolve_config(const Options& o) {
    ForecastConfig config;
    if (!o.config_path.empty()) {
        config = parse_config_text(read_file(o.config_path));
    }
    for (const auto& [key, value] : o.settings) {
        apply_setting(config, key, value);
    }
    config.validate();
    return config;
}

PriceSeries load_input(const Options& o) {
    if (o.input.empty()) {
        throw Error(ErrorCode::usage_error, "--input is required", "--input");
    }
    return ingest_csv(o.input, o.column, delimiter_of(o));
}

// Writes through `write` to `path`, or to `fallback` when path is empty.
template <typename Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& write) {
    if (path.empty()) {
        write(fallback);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw Error(ErrorCode::io_error, "cannot write " + path, path);
    }
    write(file);
    if (!file) {
        throw Error(ErrorCode::io_error, "write failed for " + path, path);
    }
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

void report_warnings(const std::vector<std::string>& warnings, std::ostream& log) {
    for (const auto& w : warnings) {
        log << "warning: " << w << '\n';
    }
}

void run_forecast(const Options& o, std::ostream& out, std::ostream& log) {
    const auto config = resolve_config(o);
    const auto series = load_input(o);
    const auto result = forecast(series, config);

    emit(o.out, out, [&](std::ostream& os) { write_forecast_csv(os, result); });
    std::string diag = o.diagnostics;
    if (diag.empty() && !o.out.empty()) {
        diag = fs::path(o.out).replace_extension(".diagnostics.json").string();
    }
    if (!diag.empty()) {
        emit(diag, out, [&](std::ostream& os) { os << diagnostics_json(result).dump(2) << '\n'; });
    }
    log << "effective horizon: " << result.horizon << '\n';
    log << "bifurcations: " << result.bifurcation_count() << '\n';
    report_warnings(result.warnings, log);
}

void run_qerror(const Options& o, std::ostream& out, std::ostream& log) {
    const auto config = resolve_config(o);
    const auto report = quantization_error(load_input(o), config);
    emit(o.out, out, [&](std::ostream& os) { os << to_json(report).dump(2) << '\n'; });
    log << "window: " << report.window << '\n';
    log << "spliced rms: " << format_number(report.spliced.rms) << '\n';
}

void run_ensemble(const Options& o, std::ostream& out, std::ostream& log) {
    const auto config = resolve_config(o);
    const auto series = load_input(o);
    std::vector<std::size_t> lengths;
    for (const auto& item : split_list(o.learning_lengths)) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            lengths.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw Error(ErrorCode::usage_error, "invalid learning length '" + item + "'",
                        "--learning-lengths");
        }
    }
    if (lengths.empty()) {
        throw Error(ErrorCode::usage_error, "--learning-lengths is required", "--learning-lengths");
    }
    const auto ensemble = walk_forward(series, lengths, config);
    for (const auto& s : ensemble.skipped) {
        log << "warning: learning length " << s.learning_length << " skipped: " << s.reason << '\n';
    }
    if (ensemble.members.empty()) {
        throw Error(ErrorCode::config_error, "no learning length could be forecast", "--learning-lengths");
    }
    emit(o.out, out, [&](std::ostream& os) { write_ensemble_csv(os, ensemble); });
    log << "members: " << ensemble.members.size() << '\n';
}

void run_aggregate(const Options& o, std::ostream& out, std::ostream& log) {
    if (o.weights.empty()) {
        throw Error(ErrorCode::usage_error, "--weights is required", "--weights");
    }
    const auto files = split_list(o.input);
    if (files.empty()) {
        throw Error(ErrorCode::usage_error, "--input needs one or more comma-separated files", "--input");
    }
    const auto weights_file = read_weights_csv(o.weights);

    WeightSet weights;
    std::vector<std::vector<double>> normalized;
    std::vector<std::string> headers;
    for (const auto& file : files) {
        const auto label = fs::path(file).stem().string();
        const auto it = std::find(weights_file.labels.begin(), weights_file.labels.end(), label);
        if (it == weights_file.labels.end()) {
            throw Error(ErrorCode::config_error, "no weight for '" + label + "'", label);
        }
        const auto series = ingest_csv(file, o.column, delimiter_of(o));
        normalized.push_back(normalize(series.values()));
        weights.labels.push_back(label);
        weights.weights.push_back(weights_file.weights[static_cast<std::size_t>(it - weights_file.labels.begin())]);
        headers.push_back(label);
    }
    auto combined = weighted_mean(normalized, weights);
    headers.emplace_back("weighted_mean");
    normalized.push_back(std::move(combined));
    emit(o.out, out, [&](std::ostream& os) { write_columns_csv(os, headers, normalized); });
    log << "aggregated: " << files.size() << " series\n";
}

void add_common(CLI::App& cmd, Options& o, bool forecast_settings) {
    cmd.add_option("--input", o.input, "input CSV (aggregate: comma-separated list)");
    cmd.add_option("--column", o.column, "value column: header name or 0-based number (default: last)");
    cmd.add_option("--delimiter", o.delimiter, "field delimiter");
    cmd.add_option("--out", o.out, "output path (default: stdout)");
    if (!forecast_settings) {
        return;
    }
    cmd.add_option("--config", o.config_path, "key = value configuration file");
    for (const auto& f : kSettingFlags) {
        cmd.add_option_function<std::string>(
            f.flag, [&o, key = std::string(f.key)](const std::string& v) { o.settings.emplace_back(key, v); },
            f.help);
    }
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Multiscale high-order Markov chain forecaster"};
    app.require_subcommand(1);
    Options o;

    auto* fc = app.add_subcommand("forecast", "forecast the continuation of a series");
    add_common(*fc, o, true);
    fc->add_option("--diagnostics", o.diagnostics, "diagnostics JSON path (default: next to --out)");

    auto* qe = app.add_subcommand("qerror", "quantization error of the known window");
    add_common(*qe, o, true);

    auto* en = app.add_subcommand("ensemble", "forecasts over several learning lengths");
    add_common(*en, o, true);
    en->add_option("--learning-lengths", o.learning_lengths, "comma-separated window lengths");

    auto* ag = app.add_subcommand("aggregate", "weighted mean of normalized series");
    add_common(*ag, o, false);
    ag->add_option("--weights", o.weights, "label,weight CSV; labels are input file stems");

    try {
        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            if (e.get_exit_code() == 0) {
                return app.exit(e, out, err);
            }
            throw Error(ErrorCode::usage_error, e.what());
        }
        if (fc->parsed()) run_forecast(o, out, err);
        else if (qe->parsed()) run_qerror(o, out, err);
        else if (en->parsed()) run_ensemble(o, out, err);
        else if (ag->parsed()) run_aggregate(o, out, err);
        return 0;
    } catch (const Error& e) {
        err << error_json(e).dump() << '\n';
        return exit_status(e.code());
    } catch (const std::exception& e) {
        err << nlohmann::json{{"code", "internal_error"}, {"message", e.what()}, {"context", ""}}.dump() << '\n';
        return 1;
    }
}

} // namespace markovcast
