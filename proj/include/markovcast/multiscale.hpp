#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "markovcast/config.hpp"
#include "markovcast/markov.hpp"
#include "markovcast/quantizer.hpp"
#include "markovcast/series.hpp"

namespace markovcast {

struct Hierarchy {
    std::vector<int> steps; // ascending, steps.front() == 1
    HierarchyKind kind = HierarchyKind::powers_of_two;
    int horizon = 1;        // requested horizon rounded down to a multiple of steps.back()
};

/// powers_of_two: 1, 2, 4, ... up to the horizon. smooth_products: every
/// 2^a * 3^b up to the horizon.
Hierarchy build_hierarchy(int horizon, HierarchyKind kind);

/// Restored path for one sampling step. values[0] is the anchor price and
/// values[n * step] are the system points; everything between is linear.
struct LevelForecast {
    int step = 1;
    std::vector<double> values;       // horizon + 1 entries
    std::vector<int> system_indices;  // 0, step, 2*step, ..., horizon
};

/// Adds each state's representative return to the previous system point and
/// fills the gaps linearly. In relative mode the increment is the price move
/// that reproduces the representative relative return,
/// y[n] = y[n-1] / (1 - r_avg). Throws size_error unless
/// states.size() * step == horizon.
LevelForecast restore_series(double anchor, const StateSequence& states, const Quantizer& q,
                             int step, int horizon);

/// Pins `fine` to the coarse level's system points: the difference at each
/// system point is interpolated linearly and added to `fine`. The result
/// equals `coarse` at its system points and keeps fine's detail between.
std::vector<double> splice(std::span<const double> fine, const LevelForecast& coarse);

/// Straight-line level from `anchor` at index 0 to `target` at index `horizon`.
LevelForecast linear_level(double anchor, double target, int horizon);

/// Everything estimated for one sampling step from the learning window.
struct LevelModel {
    int step = 1;
    int states = 0;
    int order = 0;
    Quantizer quantizer;
    /// Classified returns, one per return in the window; entry k is the
    /// return over [k, k + step].
    StateSequence classified;
    /// classified split by k mod step; each phase is a proper chain at this
    /// sampling. anchor_phase ends at the last sample.
    std::vector<StateSequence> phases;
    std::size_t anchor_phase = 0;
    TransitionTable table;
    State center = 1;
};

/// Steps 2.1-2.3 for one sampling step. Errors are rethrown as config_error
/// naming the level.
LevelModel fit_level(const PriceSeries& series, int step, const ForecastConfig& config);

struct LevelPath {
    int step = 1;
    StateSequence states;
    std::vector<BifurcationEvent> bifurcations;
    LevelForecast restored;
};

struct ScenarioForecast {
    Scenario scenario = Scenario::lower;
    std::vector<double> values;    // final forecast, horizon + 1 entries
    std::vector<double> pre_trend; // spliced levels before the trend splice
    std::vector<LevelPath> levels;
};

struct LevelSummary {
    int step = 1;
    int states = 0;
    int order = 0;
    State center = 1;
    std::vector<State> seed;
    std::vector<double> boundaries;
    std::vector<double> means;
};

struct ForecastResult {
    int requested_horizon = 0;
    int horizon = 0; // effective
    double anchor = 0.0;
    std::int64_t anchor_index = 0;
    TrendLine trend;
    std::vector<double> trend_values; // trend at anchor_index + h, h = 0..horizon
    std::vector<LevelSummary> levels;
    std::vector<ScenarioForecast> scenarios;
    std::vector<std::string> warnings;

    const ScenarioForecast* find(Scenario scenario) const;
    std::size_t bifurcation_count() const;
};

/// Full multiscale forecast from the last sample of `series`.
ForecastResult forecast(const PriceSeries& series, const ForecastConfig& config);

/// Hierarchy steps that tile the effective horizon. Steps that do not
/// divide it are reported through `warnings` when given.
std::vector<int> usable_steps(const Hierarchy& hierarchy, std::vector<std::string>* warnings = nullptr);

} // namespace markovcast
