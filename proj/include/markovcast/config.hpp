#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "markovcast/markov.hpp"
#include "markovcast/quantizer.hpp"
#include "markovcast/series.hpp"

namespace markovcast {

enum class HierarchyKind { powers_of_two, smooth_products };
enum class ScenarioSelection { lower, upper, both };

/// Which state counts as the centre of the returns distribution when the
/// cluster rule compares distances.
enum class CenterRule {
    median_state, // state holding the median training return
    middle_state, // ceil((s + 1) / 2)
};

struct LevelOverride {
    std::optional<int> states;
    std::optional<int> order;

    bool operator==(const LevelOverride&) const = default;
};

struct ForecastConfig {
    int states = 4;
    int order = 2;
    std::map<int, LevelOverride> levels; // keyed by sampling step
    double delta = 0.0;
    int n_min = 1;
    int horizon = 16;
    HierarchyKind hierarchy = HierarchyKind::powers_of_two;
    ReturnsMode returns = ReturnsMode::relative;
    QuantizerMethod quantizer = QuantizerMethod::equal_count;
    double combined_k = 3.0;
    ScenarioSelection scenario = ScenarioSelection::both;
    CenterRule center = CenterRule::median_state;

    int states_at(int step) const;
    int order_at(int step) const;

    /// Throws config_error naming the first out-of-range field.
    void validate() const;

    bool operator==(const ForecastConfig&) const = default;
};

/// Applies one `key = value` setting. Keys are the CLI flag names without
/// dashes (states, order, delta, nmin, horizon, hierarchy, returns,
/// quantizer, combined-k, scenario, center) plus level.<step>.states and
/// level.<step>.order. Throws config_error on an unknown key or bad value.
void apply_setting(ForecastConfig& config, std::string_view key, std::string_view value);

/// Parses a flat key-value document ('#' starts a comment) on top of `base`.
ForecastConfig parse_config_text(std::string_view text, ForecastConfig base = {});

/// Serializes every field; parse_config_text(to_config_text(c)) == c.
std::string to_config_text(const ForecastConfig& config);

std::string_view to_string(HierarchyKind kind);
std::string_view to_string(ReturnsMode mode);
std::string_view to_string(QuantizerMethod method);
std::string_view to_string(ScenarioSelection selection);
std::string_view to_string(Scenario scenario);
std::string_view to_string(CenterRule rule);

} // namespace markovcast
