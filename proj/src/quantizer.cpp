#include "markovcast/quantizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>

#include "markovcast/error.hpp"

namespace markovcast {
namespace {

double midpoint(double a, double b) {
    const double mid = a + (b - a) / 2.0;
    // Adjacent doubles: the midpoint can round onto `a`, which would put `a`
    // in the upper half.
    return mid > a ? mid : b;
}

std::vector<double> equal_count_cuts(std::span<const double> sorted, int s) {
    const auto n = sorted.size();
    std::vector<double> cuts;
    for (int k = 1; k < s; ++k) {
        const auto pos = static_cast<std::size_t>(k) * n / static_cast<std::size_t>(s);
        cuts.push_back(midpoint(sorted[pos - 1], sorted[pos]));
    }
    return cuts;
}

std::vector<double> equal_width_cuts(double lo, double hi, int s) {
    std::vector<double> cuts;
    const double width = (hi - lo) / s;
    for (int k = 1; k < s; ++k) {
        cuts.push_back(lo + k * width);
    }
    return cuts;
}

std::vector<double> combined_cuts(std::span<const double> sorted, int s, double k) {
    const double n = static_cast<double>(sorted.size());
    const double mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / n;
    double var = 0.0;
    for (double v : sorted) {
        var += (v - mean) * (v - mean);
    }
    const double limit = k * std::sqrt(var / n);
    const int inner = s - 2;
    if (inner == 0) {
        return {0.0};
    }
    std::vector<double> cuts;
    for (int j = 0; j <= inner; ++j) {
        cuts.push_back(-limit + j * (2.0 * limit / inner));
    }
    return cuts;
}

// Index range [first, last) of `sorted` falling in each state.
std::vector<std::pair<std::size_t, std::size_t>> state_ranges(std::span<const double> sorted,
                                                              std::span<const double> cuts) {
    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    std::size_t first = 0;
    for (double c : cuts) {
        const auto last = static_cast<std::size_t>(
            std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
        ranges.emplace_back(first, std::max(first, last));
        first = std::max(first, last);
    }
    ranges.emplace_back(first, sorted.size());
    return ranges;
}

// Cut point inside sorted[first, last) closest to the middle that separates
// two distinct values. Returns nullopt when the range holds a single value.
std::optional<double> split_point(std::span<const double> sorted, std::size_t first,
                                  std::size_t last) {
    const std::size_t target = first + (last - first) / 2;
    std::optional<std::size_t> best;
    for (std::size_t p = first + 1; p < last; ++p) {
        if (sorted[p - 1] < sorted[p]) {
            const auto dist = p > target ? p - target : target - p;
            const auto best_dist = best ? (*best > target ? *best - target : target - *best)
                                        : std::numeric_limits<std::size_t>::max();
            if (dist < best_dist) {
                best = p;
            }
        }
    }
    if (!best) {
        return std::nullopt;
    }
    return midpoint(sorted[*best - 1], sorted[*best]);
}

void repair_empty_states(std::span<const double> sorted, std::vector<double>& cuts) {
    for (;;) {
        auto ranges = state_ranges(sorted, cuts);
        const auto empty = std::find_if(ranges.begin(), ranges.end(),
                                        [](const auto& r) { return r.first == r.second; });
        if (empty == ranges.end()) {
            return;
        }
        const auto i = static_cast<std::size_t>(empty - ranges.begin());
        cuts.erase(cuts.begin() + static_cast<std::ptrdiff_t>(i > 0 ? i - 1 : 0));

        ranges = state_ranges(sorted, cuts);
        std::vector<std::size_t> order(ranges.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return ranges[a].second - ranges[a].first > ranges[b].second - ranges[b].first;
        });
        bool split = false;
        for (std::size_t idx : order) {
            if (auto cut = split_point(sorted, ranges[idx].first, ranges[idx].second)) {
                cuts.insert(std::upper_bound(cuts.begin(), cuts.end(), *cut), *cut);
                split = true;
                break;
            }
        }
        if (!split) {
            // Unreachable while s <= distinct values.
            throw Error(ErrorCode::infeasible_alphabet, "no state can be split during repair");
        }
    }
}

} // namespace

Quantizer::Quantizer(int s, std::vector<double> boundaries, std::vector<double> means,
                     QuantizerMethod method, ReturnsMode mode, int step)
    : s_(s), boundaries_(std::move(boundaries)), means_(std::move(means)), method_(method),
      mode_(mode), step_(step) {
    if (s_ < 2) {
        throw Error(ErrorCode::contract_error, "a quantizer needs at least two states");
    }
    if (boundaries_.size() != static_cast<std::size_t>(s_ - 1) ||
        means_.size() != static_cast<std::size_t>(s_)) {
        throw Error(ErrorCode::contract_error, "quantizer boundaries/means do not match s");
    }
    if (step_ < 1) {
        throw Error(ErrorCode::contract_error, "quantizer step must be positive");
    }
    for (std::size_t i = 0; i < boundaries_.size(); ++i) {
        if (!std::isfinite(boundaries_[i]) || (i > 0 && !(boundaries_[i - 1] < boundaries_[i]))) {
            throw Error(ErrorCode::contract_error, "quantizer boundaries must be finite and strictly increasing");
        }
    }
    for (double m : means_) {
        if (!std::isfinite(m)) {
            throw Error(ErrorCode::contract_error, "quantizer means must be finite");
        }
    }
}

State Quantizer::classify(double r) const {
    return static_cast<State>(std::upper_bound(boundaries_.begin(), boundaries_.end(), r) -
                              boundaries_.begin()) + 1;
}

double Quantizer::representative(State state) const {
    if (state < 1 || state > s_) {
        throw Error(ErrorCode::domain_error,
                    "state " + std::to_string(state) + " outside 1.." + std::to_string(s_));
    }
    return means_[static_cast<std::size_t>(state - 1)];
}

double Quantizer::lower_limit(State state) const {
    return state <= 1 ? -std::numeric_limits<double>::infinity()
                      : boundaries_[static_cast<std::size_t>(state - 2)];
}

double Quantizer::upper_limit(State state) const {
    return state >= s_ ? std::numeric_limits<double>::infinity()
                       : boundaries_[static_cast<std::size_t>(state - 1)];
}

Quantizer build_quantizer(const ReturnsSeries& returns, int s, const QuantizerOptions& options) {
    if (s < 2) {
        throw Error(ErrorCode::domain_error, "a quantizer needs at least two states");
    }
    std::vector<double> sorted = returns.values;
    std::sort(sorted.begin(), sorted.end());
    std::size_t distinct_count = sorted.empty() ? 0 : 1;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i - 1] < sorted[i]) {
            ++distinct_count;
        }
    }
    if (distinct_count < 2) {
        throw Error(ErrorCode::degenerate_range, "all returns are identical; no state alphabet can be built");
    }
    if (static_cast<std::size_t>(s) > distinct_count) {
        throw Error(ErrorCode::infeasible_alphabet,
                    std::to_string(s) + " states requested but only " +
                        std::to_string(distinct_count) + " distinct returns");
    }

    std::vector<double> cuts;
    switch (options.method) {
    case QuantizerMethod::equal_count:
        cuts = equal_count_cuts(sorted, s);
        break;
    case QuantizerMethod::equal_width:
        cuts = equal_width_cuts(sorted.front(), sorted.back(), s);
        break;
    case QuantizerMethod::combined:
        if (!(options.sigma_multiplier > 0.0)) {
            throw Error(ErrorCode::domain_error, "sigma multiplier must be positive");
        }
        cuts = combined_cuts(sorted, s, options.sigma_multiplier);
        break;
    }
    repair_empty_states(sorted, cuts);

    std::vector<double> means;
    for (const auto& [first, last] : state_ranges(sorted, cuts)) {
        double sum = 0.0;
        for (auto i = first; i < last; ++i) {
            sum += sorted[i];
        }
        means.push_back(sum / static_cast<double>(last - first));
    }
    return Quantizer(s, std::move(cuts), std::move(means), options.method, returns.mode, returns.step);
}

StateSequence classify(const ReturnsSeries& returns, const Quantizer& q) {
    if (returns.step != q.step() || returns.mode != q.mode()) {
        throw Error(ErrorCode::contract_error, "returns step/mode do not match the quantizer");
    }
    StateSequence out{{}, q.states(), q.step()};
    out.states.reserve(returns.values.size());
    for (double r : returns.values) {
        out.states.push_back(q.classify(r));
    }
    return out;
}

std::vector<double> dequantize(const StateSequence& states, const Quantizer& q) {
    if (states.s != q.states()) {
        throw Error(ErrorCode::contract_error, "state alphabet size does not match the quantizer");
    }
    std::vector<double> out;
    out.reserve(states.states.size());
    for (State st : states.states) {
        out.push_back(q.representative(st));
    }
    return out;
}

} // namespace markovcast
