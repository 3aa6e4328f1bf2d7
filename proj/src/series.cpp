#include "markovcast/series.hpp"

#include <algorithm>
#include <cmath>

#include "markovcast/error.hpp"

namespace markovcast {

PriceSeries::PriceSeries(std::vector<double> values, std::int64_t origin_index,
                         std::string step_label)
    : values_(std::move(values)), origin_index_(origin_index), step_label_(std::move(step_label)) {
    if (values_.size() < 2) {
        throw Error(ErrorCode::size_error, "a price series needs at least two samples");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw Error(ErrorCode::domain_error, "non-finite price value",
                        "sample " + std::to_string(i));
        }
    }
}

PriceSeries PriceSeries::suffix(std::size_t length) const {
    if (length > values_.size()) {
        throw Error(ErrorCode::size_error,
                    "suffix of length " + std::to_string(length) + " exceeds series length " +
                        std::to_string(values_.size()));
    }
    const std::size_t skip = values_.size() - length;
    return PriceSeries(std::vector<double>(values_.begin() + static_cast<std::ptrdiff_t>(skip),
                                           values_.end()),
                       origin_index_ + static_cast<std::int64_t>(skip), step_label_);
}

ReturnsSeries compute_returns(const PriceSeries& series, int step, ReturnsMode mode) {
    if (step < 1) {
        throw Error(ErrorCode::domain_error, "returns step must be positive");
    }
    const auto n = series.size();
    if (static_cast<std::size_t>(step) >= n) {
        throw Error(ErrorCode::size_error,
                    "returns step " + std::to_string(step) + " needs more than " +
                        std::to_string(n) + " samples");
    }
    ReturnsSeries out{{}, step, mode};
    out.values.reserve(n - static_cast<std::size_t>(step));
    for (std::size_t k = 0; k + static_cast<std::size_t>(step) < n; ++k) {
        const double earlier = series[k];
        const double later = series[k + static_cast<std::size_t>(step)];
        if (mode == ReturnsMode::absolute) {
            out.values.push_back(later - earlier);
        } else {
            if (later == 0.0) {
                throw Error(ErrorCode::domain_error, "zero price in relative-return denominator",
                            "sample " + std::to_string(k + static_cast<std::size_t>(step)));
            }
            out.values.push_back((later - earlier) / later);
        }
    }
    return out;
}

std::vector<double> normalize(std::span<const double> values) {
    if (values.empty()) {
        throw Error(ErrorCode::degenerate_range, "cannot normalize an empty sequence");
    }
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    const double min = *lo;
    const double range = *hi - *lo;
    if (!(range > 0.0)) {
        throw Error(ErrorCode::degenerate_range, "cannot normalize a constant sequence");
    }
    std::vector<double> out;
    out.reserve(values.size());
    for (double v : values) {
        out.push_back((v - min) / range);
    }
    return out;
}

TrendLine fit_linear_trend(const PriceSeries& series) {
    // Centered sums keep the normal equations well conditioned for large
    // origin indices.
    const auto n = static_cast<double>(series.size());
    const double x_mean = static_cast<double>(series.origin_index()) + (n - 1.0) / 2.0;
    double y_mean = 0.0;
    for (double v : series.values()) {
        y_mean += v;
    }
    y_mean /= n;

    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double dx = static_cast<double>(series.origin_index()) + static_cast<double>(i) - x_mean;
        sxx += dx * dx;
        sxy += dx * (series[i] - y_mean);
    }
    const double slope = sxy / sxx;
    return TrendLine{y_mean - slope * x_mean, slope};
}

} // namespace markovcast
