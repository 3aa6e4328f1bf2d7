#include "markovcast/multiscale.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "markovcast/error.hpp"

namespace markovcast {
namespace {

double median(std::vector<double> values) {
    const auto n = values.size();
    const auto mid = values.begin() + static_cast<std::ptrdiff_t>(n / 2);
    std::nth_element(values.begin(), mid, values.end());
    if (n % 2 == 1) {
        return *mid;
    }
    const double upper = *mid;
    const double lower = *std::max_element(values.begin(), mid);
    return lower + (upper - lower) / 2.0;
}

std::vector<int> system_indices(int step, int horizon) {
    std::vector<int> out;
    for (int i = 0; i <= horizon; i += step) {
        out.push_back(i);
    }
    return out;
}

std::string level_name(int step) { return "level " + std::to_string(step); }

} // namespace

Hierarchy build_hierarchy(int horizon, HierarchyKind kind) {
    if (horizon < 1) {
        throw Error(ErrorCode::domain_error, "horizon must be at least 1");
    }
    Hierarchy h;
    h.kind = kind;
    if (kind == HierarchyKind::powers_of_two) {
        for (int step = 1; step <= horizon; step *= 2) {
            h.steps.push_back(step);
            if (step > horizon / 2) {
                break;
            }
        }
    } else {
        std::set<int> smooth;
        for (long long two = 1; two <= horizon; two *= 2) {
            for (long long v = two; v <= horizon; v *= 3) {
                smooth.insert(static_cast<int>(v));
            }
        }
        h.steps.assign(smooth.begin(), smooth.end());
    }
    h.horizon = horizon / h.steps.back() * h.steps.back();
    return h;
}

std::vector<int> usable_steps(const Hierarchy& hierarchy, std::vector<std::string>* warnings) {
    std::vector<int> out;
    for (int step : hierarchy.steps) {
        if (hierarchy.horizon % step == 0) {
            out.push_back(step);
        } else if (warnings) {
            warnings->push_back("step " + std::to_string(step) + " does not divide horizon " +
                                std::to_string(hierarchy.horizon) + "; level skipped");
        }
    }
    return out;
}

LevelForecast restore_series(double anchor, const StateSequence& states, const Quantizer& q,
                             int step, int horizon) {
    if (step != q.step()) {
        throw Error(ErrorCode::contract_error, "restoration step does not match the quantizer");
    }
    if (step < 1 || horizon < 0 || horizon % step != 0 ||
        states.states.size() != static_cast<std::size_t>(horizon / step)) {
        throw Error(ErrorCode::size_error,
                    std::to_string(states.states.size()) + " states of step " +
                        std::to_string(step) + " do not cover horizon " + std::to_string(horizon));
    }
    LevelForecast out{step, {}, system_indices(step, horizon)};
    out.values.reserve(static_cast<std::size_t>(horizon) + 1);
    out.values.push_back(anchor);

    double level = anchor;
    for (State st : states.states) {
        const double r = q.representative(st);
        double increment = r;
        if (q.mode() == ReturnsMode::relative) {
            if (!(r < 1.0)) {
                throw Error(ErrorCode::domain_error, "relative return >= 1 cannot be restored");
            }
            increment = level * r / (1.0 - r);
        }
        for (int j = 1; j < step; ++j) {
            out.values.push_back(level + j * increment / step);
        }
        level += increment;
        out.values.push_back(level);
    }
    return out;
}

std::vector<double> splice(std::span<const double> fine, const LevelForecast& coarse) {
    const auto& y = coarse.values;
    if (fine.size() != y.size() || fine.empty()) {
        throw Error(ErrorCode::contract_error, "splice inputs differ in length");
    }
    const double tol = 1e-9 * std::max(1.0, std::abs(fine[0]));
    if (std::abs(fine[0] - y[0]) > tol) {
        throw Error(ErrorCode::contract_error, "splice inputs do not share an anchor");
    }
    const int step = coarse.step;
    const auto horizon = static_cast<int>(y.size()) - 1;
    if (step < 1 || horizon % step != 0) {
        throw Error(ErrorCode::contract_error, "coarse step does not tile the splice length");
    }

    std::vector<double> z(fine.begin(), fine.end());
    double prev = 0.0; // correction at the previous system point
    for (int n = step; n <= horizon; n += step) {
        const double next = y[static_cast<std::size_t>(n)] - fine[static_cast<std::size_t>(n)];
        for (int j = 1; j < step; ++j) {
            const auto i = static_cast<std::size_t>(n - step + j);
            z[i] = fine[i] + prev + (next - prev) * j / step;
        }
        z[static_cast<std::size_t>(n)] = y[static_cast<std::size_t>(n)];
        prev = next;
    }
    z[0] = y[0];
    return z;
}

LevelForecast linear_level(double anchor, double target, int horizon) {
    if (horizon < 1) {
        throw Error(ErrorCode::domain_error, "horizon must be at least 1");
    }
    LevelForecast out{horizon, {}, {0, horizon}};
    out.values.reserve(static_cast<std::size_t>(horizon) + 1);
    for (int i = 0; i < horizon; ++i) {
        out.values.push_back(anchor + (target - anchor) * i / horizon);
    }
    out.values.push_back(target);
    return out;
}

LevelModel fit_level(const PriceSeries& series, int step, const ForecastConfig& config) {
    const int s = config.states_at(step);
    const int r = config.order_at(step);
    try {
        auto returns = compute_returns(series, step, config.returns);
        auto q = build_quantizer(returns, s, {config.quantizer, config.combined_k});
        auto classified = classify(returns, q);

        std::vector<StateSequence> phases(static_cast<std::size_t>(step),
                                          StateSequence{{}, s, step});
        for (std::size_t k = 0; k < classified.states.size(); ++k) {
            phases[k % static_cast<std::size_t>(step)].states.push_back(classified.states[k]);
        }
        const std::size_t anchor_phase = (series.size() - 1 - static_cast<std::size_t>(step)) %
                                         static_cast<std::size_t>(step);
        if (phases[anchor_phase].states.size() < static_cast<std::size_t>(r) + 1) {
            throw Error(ErrorCode::size_error,
                        "order " + std::to_string(r) + " needs " + std::to_string(r + 1) +
                            " states at this sampling, only " +
                            std::to_string(phases[anchor_phase].states.size()) + " available");
        }
        auto table = estimate_transitions(phases, r);
        const State center = config.center == CenterRule::median_state
                                 ? q.classify(median(returns.values))
                                 : (s + 2) / 2;
        return LevelModel{step,          s,
                          r,             std::move(q),
                          std::move(classified), std::move(phases),
                          anchor_phase,  std::move(table),
                          center};
    } catch (const Error& e) {
        throw Error(ErrorCode::config_error, level_name(step) + ": " + e.what(),
                    level_name(step));
    }
}

const ScenarioForecast* ForecastResult::find(Scenario scenario) const {
    for (const auto& sc : scenarios) {
        if (sc.scenario == scenario) {
            return &sc;
        }
    }
    return nullptr;
}

std::size_t ForecastResult::bifurcation_count() const {
    std::size_t n = 0;
    for (const auto& sc : scenarios) {
        for (const auto& lvl : sc.levels) {
            n += lvl.bifurcations.size();
        }
    }
    return n;
}

ForecastResult forecast(const PriceSeries& series, const ForecastConfig& config) {
    config.validate();
    const Hierarchy hierarchy = build_hierarchy(config.horizon, config.hierarchy);

    ForecastResult result;
    result.requested_horizon = config.horizon;
    result.horizon = hierarchy.horizon;
    result.anchor = series.back();
    result.anchor_index = series.last_index();
    if (result.horizon != config.horizon) {
        result.warnings.push_back("horizon " + std::to_string(config.horizon) +
                                  " rounded down to " + std::to_string(result.horizon));
    }
    const auto steps = usable_steps(hierarchy, &result.warnings);

    std::vector<Scenario> wanted;
    if (config.scenario != ScenarioSelection::upper) wanted.push_back(Scenario::lower);
    if (config.scenario != ScenarioSelection::lower) wanted.push_back(Scenario::upper);
    for (Scenario sc : wanted) {
        result.scenarios.push_back(ScenarioForecast{sc, {}, {}, {}});
    }

    for (int step : steps) {
        const LevelModel model = fit_level(series, step, config);
        const auto& anchor_states = model.phases[model.anchor_phase].states;
        const auto seed = std::span<const State>(anchor_states)
                              .last(static_cast<std::size_t>(model.order));
        result.levels.push_back(LevelSummary{step, model.states, model.order, model.center,
                                             std::vector<State>(seed.begin(), seed.end()),
                                             std::vector<double>(model.quantizer.boundaries().begin(),
                                                                 model.quantizer.boundaries().end()),
                                             std::vector<double>(model.quantizer.means().begin(),
                                                                 model.quantizer.means().end())});

        for (auto& sc : result.scenarios) {
            PredictionOptions opts{config.delta, config.n_min, model.center, sc.scenario};
            auto rollout = predict_states(model.table, seed, result.horizon / step, opts, step);
            auto restored = restore_series(result.anchor, rollout.states, model.quantizer, step,
                                           result.horizon);
            sc.pre_trend = sc.pre_trend.empty() ? restored.values : splice(sc.pre_trend, restored);
            sc.levels.push_back(LevelPath{step, std::move(rollout.states),
                                          std::move(rollout.bifurcations), std::move(restored)});
        }
    }

    result.trend = fit_linear_trend(series);
    for (int h = 0; h <= result.horizon; ++h) {
        result.trend_values.push_back(
            result.trend.at(static_cast<double>(result.anchor_index + h)));
    }
    const auto trend_level = linear_level(result.anchor, result.trend_values.back(), result.horizon);
    for (auto& sc : result.scenarios) {
        sc.values = splice(sc.pre_trend, trend_level);
    }
    return result;
}

} // namespace markovcast
