#include "markovcast/eval.hpp"

#include <algorithm>
#include <cmath>

#include "markovcast/error.hpp"
#include "markovcast/multiscale.hpp"

namespace markovcast {

ErrorStats error_stats(std::span<const double> estimate, std::span<const double> actual) {
    if (estimate.size() != actual.size() || estimate.empty()) {
        throw Error(ErrorCode::contract_error, "error statistics need equal, nonempty inputs");
    }
    ErrorStats out;
    double sq = 0.0;
    for (std::size_t i = 0; i < estimate.size(); ++i) {
        const double e = estimate[i] - actual[i];
        out.max_abs = std::max(out.max_abs, std::abs(e));
        sq += e * e;
    }
    out.rms = std::sqrt(sq / static_cast<double>(estimate.size()));
    return out;
}

QuantizationReport quantization_error(const PriceSeries& series, const ForecastConfig& config) {
    config.validate();
    const Hierarchy hierarchy = build_hierarchy(config.horizon, config.hierarchy);
    const auto steps = usable_steps(hierarchy);
    const int largest = steps.back();
    const int window = static_cast<int>((series.size() - 1) / static_cast<std::size_t>(largest)) * largest;
    if (window < largest) {
        throw Error(ErrorCode::config_error,
                    "series too short for step " + std::to_string(largest), "level " + std::to_string(largest));
    }
    const auto actual = series.values().first(static_cast<std::size_t>(window) + 1);

    QuantizationReport report;
    report.window = window;
    for (int step : steps) {
        const LevelModel model = fit_level(series, step, config);
        // Phase 0: returns starting at samples 0, step, 2*step, ...
        StateSequence known{{}, model.states, step};
        for (int k = 0; k < window; k += step) {
            known.states.push_back(model.classified.states[static_cast<std::size_t>(k)]);
        }
        const auto level = restore_series(series.front(), known, model.quantizer, step, window);
        report.levels.push_back({step, error_stats(level.values, actual)});
        report.restored = report.restored.empty() ? level.values : splice(report.restored, level);
    }
    report.spliced = error_stats(report.restored, actual);
    return report;
}

EnsembleResult summarize(std::vector<EnsembleMember> members) {
    EnsembleResult out;
    out.members = std::move(members);
    if (out.members.empty()) {
        return out;
    }
    const auto len = out.members.front().values.size();
    for (const auto& m : out.members) {
        if (m.values.size() != len) {
            throw Error(ErrorCode::contract_error, "ensemble members differ in length");
        }
    }
    const auto count = static_cast<double>(out.members.size());
    out.mean.assign(len, 0.0);
    out.stddev.assign(len, 0.0);
    for (std::size_t i = 0; i < len; ++i) {
        double sum = 0.0;
        for (const auto& m : out.members) {
            sum += m.values[i];
        }
        const double mean = sum / count;
        double sq = 0.0;
        for (const auto& m : out.members) {
            sq += (m.values[i] - mean) * (m.values[i] - mean);
        }
        out.mean[i] = mean;
        out.stddev[i] = std::sqrt(sq / count);
    }
    return out;
}

EnsembleResult walk_forward(const PriceSeries& series, std::span<const std::size_t> learning_lengths,
                            const ForecastConfig& config) {
    std::vector<EnsembleMember> members;
    std::vector<SkippedMember> skipped;
    for (std::size_t len : learning_lengths) {
        try {
            const auto result = forecast(series.suffix(len), config);
            const auto* lower = result.find(Scenario::lower);
            const auto* upper = result.find(Scenario::upper);
            std::vector<double> values;
            if (lower && upper) {
                for (std::size_t i = 0; i < lower->values.size(); ++i) {
                    values.push_back(lower->values[i] + (upper->values[i] - lower->values[i]) / 2.0);
                }
            } else {
                values = (lower ? lower : upper)->values;
            }
            members.push_back({len, std::move(values)});
        } catch (const Error& e) {
            skipped.push_back({len, e.what()});
        }
    }
    auto out = summarize(std::move(members));
    out.skipped = std::move(skipped);
    return out;
}

std::vector<double> weighted_mean(std::span<const std::vector<double>> series, const WeightSet& weights) {
    if (series.empty() || series.size() != weights.weights.size()) {
        throw Error(ErrorCode::contract_error, "one weight is needed per series");
    }
    double total = 0.0;
    for (double w : weights.weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw Error(ErrorCode::contract_error, "weights must be finite and nonnegative");
        }
        total += w;
    }
    if (!(total > 0.0)) {
        throw Error(ErrorCode::contract_error, "weights must not all be zero");
    }
    const auto len = series.front().size();
    std::vector<double> out(len, 0.0);
    for (std::size_t k = 0; k < series.size(); ++k) {
        if (series[k].size() != len) {
            throw Error(ErrorCode::contract_error, "aggregated series differ in length");
        }
        for (std::size_t i = 0; i < len; ++i) {
            out[i] += weights.weights[k] * series[k][i];
        }
    }
    for (double& v : out) {
        v /= total;
    }
    return out;
}

} // namespace markovcast
