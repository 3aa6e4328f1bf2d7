#include "markovcast/json_io.hpp"

#include "markovcast/config.hpp"

namespace markovcast {

using nlohmann::json;

json to_json(const Quantizer& q) {
    return json{
        {"s", q.states()},
        {"step", q.step()},
        {"mode", to_string(q.mode())},
        {"method", to_string(q.method())},
        {"boundaries", std::vector<double>(q.boundaries().begin(), q.boundaries().end())},
        {"means", std::vector<double>(q.means().begin(), q.means().end())},
    };
}

Quantizer quantizer_from_json(const json& doc) {
    try {
        const auto mode_name = doc.at("mode").get<std::string>();
        const auto method_name = doc.at("method").get<std::string>();
        ReturnsMode mode;
        if (mode_name == "abs") mode = ReturnsMode::absolute;
        else if (mode_name == "rel") mode = ReturnsMode::relative;
        else throw Error(ErrorCode::parse_error, "unknown returns mode '" + mode_name + "'");
        QuantizerMethod method;
        if (method_name == "count") method = QuantizerMethod::equal_count;
        else if (method_name == "width") method = QuantizerMethod::equal_width;
        else if (method_name == "combined") method = QuantizerMethod::combined;
        else throw Error(ErrorCode::parse_error, "unknown quantizer method '" + method_name + "'");
        return Quantizer(doc.at("s").get<int>(), doc.at("boundaries").get<std::vector<double>>(),
                         doc.at("means").get<std::vector<double>>(), method, mode,
                         doc.at("step").get<int>());
    } catch (const json::exception& e) {
        throw Error(ErrorCode::parse_error, std::string("malformed quantizer document: ") + e.what());
    }
}

json to_json(const TransitionTable& table) {
    json levels = json::array();
    for (int len = 0; len <= table.order(); ++len) {
        json rows = json::array();
        for (const auto& [history, row] : table.rows(len)) {
            rows.push_back({{"history", history}, {"counts", row.counts}, {"total", row.total}});
        }
        levels.push_back({{"history_length", len}, {"rows", std::move(rows)}});
    }
    return json{{"order", table.order()}, {"s", table.states()}, {"levels", std::move(levels)}};
}

json diagnostics_json(const ForecastResult& result) {
    json levels = json::array();
    for (const auto& lvl : result.levels) {
        levels.push_back({
            {"step", lvl.step},
            {"states", lvl.states},
            {"order", lvl.order},
            {"center", lvl.center},
            {"seed", lvl.seed},
            {"boundaries", lvl.boundaries},
            {"means", lvl.means},
        });
    }
    json scenarios = json::array();
    for (const auto& sc : result.scenarios) {
        json paths = json::array();
        for (const auto& path : sc.levels) {
            json events = json::array();
            for (const auto& ev : path.bifurcations) {
                events.push_back({{"position", ev.step}, {"candidates", ev.candidates}, {"chosen", ev.chosen}});
            }
            paths.push_back({{"step", path.step}, {"states", path.states.states}, {"bifurcations", std::move(events)}});
        }
        scenarios.push_back({{"scenario", to_string(sc.scenario)}, {"levels", std::move(paths)}});
    }
    return json{
        {"requested_horizon", result.requested_horizon},
        {"effective_horizon", result.horizon},
        {"anchor", result.anchor},
        {"anchor_index", result.anchor_index},
        {"trend", {{"intercept", result.trend.intercept}, {"slope", result.trend.slope}}},
        {"bifurcation_count", result.bifurcation_count()},
        {"warnings", result.warnings},
        {"levels", std::move(levels)},
        {"scenarios", std::move(scenarios)},
    };
}

json to_json(const QuantizationReport& report) {
    json levels = json::array();
    for (const auto& lvl : report.levels) {
        levels.push_back({{"step", lvl.step}, {"max_abs", lvl.stats.max_abs}, {"rms", lvl.stats.rms}});
    }
    return json{
        {"window", report.window},
        {"levels", std::move(levels)},
        {"spliced", {{"max_abs", report.spliced.max_abs}, {"rms", report.spliced.rms}}},
    };
}

json error_json(const Error& error) {
    return json{{"code", to_string(error.code())}, {"message", error.what()}, {"context", error.context()}};
}

} // namespace markovcast
