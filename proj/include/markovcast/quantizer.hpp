#pragma once

#include <span>
#include <vector>

#include "markovcast/series.hpp"

namespace markovcast {

/// State labels run 1..s.
using State = int;

enum class QuantizerMethod { equal_count, equal_width, combined };

struct StateSequence {
    std::vector<State> states;
    int s = 0;
    int step = 1;
};

/// State alphabet for one sampling step. State i covers the half-open
/// interval [boundaries[i-2], boundaries[i-1]); the outer states are
/// unbounded. Each state carries the mean training return that fell in it.
class Quantizer {
public:
    /// Validates shape and ordering; throws contract_error on violation.
    Quantizer(int s, std::vector<double> boundaries, std::vector<double> means,
              QuantizerMethod method, ReturnsMode mode, int step);

    int states() const noexcept { return s_; }
    std::span<const double> boundaries() const noexcept { return boundaries_; }
    std::span<const double> means() const noexcept { return means_; }
    QuantizerMethod method() const noexcept { return method_; }
    ReturnsMode mode() const noexcept { return mode_; }
    int step() const noexcept { return step_; }

    State classify(double r) const;
    /// Mean training return of `state`; throws domain_error when out of range.
    double representative(State state) const;
    double lower_limit(State state) const;
    double upper_limit(State state) const;

private:
    int s_;
    std::vector<double> boundaries_;
    std::vector<double> means_;
    QuantizerMethod method_;
    ReturnsMode mode_;
    int step_;
};

struct QuantizerOptions {
    QuantizerMethod method = QuantizerMethod::equal_count;
    /// Half-width of the central range, in standard deviations, for `combined`.
    double sigma_multiplier = 3.0;
};

/// Builds an s-state alphabet from a returns sample, then repairs empty
/// states (merge with a neighbour, re-split the most populous state) until
/// every state holds at least one training return.
///
/// Throws degenerate_range when every return is identical and
/// infeasible_alphabet when s exceeds the number of distinct returns.
Quantizer build_quantizer(const ReturnsSeries& returns, int s, const QuantizerOptions& options = {});

/// Throws contract_error if the returns were computed with another step or mode.
StateSequence classify(const ReturnsSeries& returns, const Quantizer& q);

std::vector<double> dequantize(const StateSequence& states, const Quantizer& q);

} // namespace markovcast
