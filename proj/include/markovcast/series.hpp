#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace markovcast {

enum class ReturnsMode { absolute, relative };

/// Uniformly sampled price levels. Sample i sits at index origin_index + i.
class PriceSeries {
public:
    /// Throws size_error for fewer than two samples, domain_error for a
    /// non-finite value.
    explicit PriceSeries(std::vector<double> values, std::int64_t origin_index = 0,
                         std::string step_label = {});

    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    double front() const { return values_.front(); }
    double back() const { return values_.back(); }

    std::int64_t origin_index() const noexcept { return origin_index_; }
    std::int64_t last_index() const noexcept {
        return origin_index_ + static_cast<std::int64_t>(values_.size()) - 1;
    }
    const std::string& step_label() const noexcept { return step_label_; }

    /// The trailing `length` samples, keeping their original indices.
    PriceSeries suffix(std::size_t length) const;

private:
    std::vector<double> values_;
    std::int64_t origin_index_;
    std::string step_label_;
};

/// values[k] is the return over [k, k + step] of the source series.
struct ReturnsSeries {
    std::vector<double> values;
    int step = 1;
    ReturnsMode mode = ReturnsMode::absolute;
};

struct TrendLine {
    double intercept = 0.0;
    double slope = 0.0;

    double at(double index) const { return intercept + slope * index; }
};

/// Absolute: p[k+step] - p[k]. Relative: (p[k+step] - p[k]) / p[k+step],
/// i.e. divided by the later price.
ReturnsSeries compute_returns(const PriceSeries& series, int step, ReturnsMode mode);

/// Min-max normalization onto [0, 1]. Throws degenerate_range for a
/// constant (or empty) input.
std::vector<double> normalize(std::span<const double> values);

/// Ordinary least squares over (origin_index + i, values[i]) for every sample.
TrendLine fit_linear_trend(const PriceSeries& series);

} // namespace markovcast
