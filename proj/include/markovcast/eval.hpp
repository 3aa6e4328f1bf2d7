#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "markovcast/config.hpp"
#include "markovcast/series.hpp"

namespace markovcast {

struct ErrorStats {
    double max_abs = 0.0;
    double rms = 0.0;
};

ErrorStats error_stats(std::span<const double> estimate, std::span<const double> actual);

struct LevelError {
    int step = 1;
    ErrorStats stats;
};

/// Restoration error over the known window when every level replays its
/// true state sequence instead of a prediction.
struct QuantizationReport {
    int window = 0;                 // samples 0..window are compared
    std::vector<LevelError> levels; // each level restored on its own
    ErrorStats spliced;             // all levels spliced together
    std::vector<double> restored;   // the spliced reconstruction
};

/// Replays classify -> restore -> splice from the first sample, using the
/// same per-level quantizers the forecaster would build. The window is the
/// longest prefix that the largest step tiles.
QuantizationReport quantization_error(const PriceSeries& series, const ForecastConfig& config);

struct EnsembleMember {
    std::size_t learning_length = 0;
    std::vector<double> values;
};

struct SkippedMember {
    std::size_t learning_length = 0;
    std::string reason;
};

struct EnsembleResult {
    std::vector<EnsembleMember> members;
    std::vector<double> mean;
    std::vector<double> stddev; // population
    std::vector<SkippedMember> skipped;
};

/// Per-index mean and population standard deviation of equal-length members.
EnsembleResult summarize(std::vector<EnsembleMember> members);

/// One forecast per learning length, each trained on the trailing window of
/// that length so all members share the anchor. A length that cannot be
/// forecast is recorded in `skipped`. With both scenarios selected, a
/// member is the midpoint of the lower and upper paths.
EnsembleResult walk_forward(const PriceSeries& series, std::span<const std::size_t> learning_lengths,
                            const ForecastConfig& config);

struct WeightSet {
    std::vector<std::string> labels;
    std::vector<double> weights;
};

/// Per-index sum(w_k * y_k) / sum(w_k). Inputs are expected to be
/// normalized already. Throws contract_error on mismatched lengths or
/// invalid weights.
std::vector<double> weighted_mean(std::span<const std::vector<double>> series, const WeightSet& weights);

} // namespace markovcast
