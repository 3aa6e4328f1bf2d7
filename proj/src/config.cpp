#include "markovcast/config.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "markovcast/error.hpp"

namespace markovcast {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
    throw Error(ErrorCode::config_error,
                "invalid value '" + std::string(value) + "' for '" + std::string(key) + "'",
                std::string(key));
}

int parse_int(std::string_view key, std::string_view value) {
    int out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        bad_value(key, value);
    }
    return out;
}

double parse_double(std::string_view key, std::string_view value) {
    // from_chars for double is unavailable on some toolchains still in use.
    std::string buf(value);
    std::size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(buf, &used);
    } catch (const std::exception&) {
        bad_value(key, value);
    }
    if (used != buf.size() || !std::isfinite(out)) {
        bad_value(key, value);
    }
    return out;
}

} // namespace

int ForecastConfig::states_at(int step) const {
    const auto it = levels.find(step);
    return it != levels.end() && it->second.states ? *it->second.states : states;
}

int ForecastConfig::order_at(int step) const {
    const auto it = levels.find(step);
    return it != levels.end() && it->second.order ? *it->second.order : order;
}

void ForecastConfig::validate() const {
    auto fail = [](const std::string& field, const std::string& why) {
        throw Error(ErrorCode::config_error, field + " " + why, field);
    };
    if (states < 2) fail("states", "must be at least 2");
    if (order < 1) fail("order", "must be at least 1");
    if (!(delta >= 0.0 && delta <= 1.0)) fail("delta", "must lie in [0, 1]");
    if (n_min < 1) fail("nmin", "must be at least 1");
    if (horizon < 1) fail("horizon", "must be at least 1");
    if (!(combined_k > 0.0)) fail("combined-k", "must be positive");
    for (const auto& [step, o] : levels) {
        const auto name = "level." + std::to_string(step);
        if (step < 1) fail(name, "step must be positive");
        if (o.states && *o.states < 2) fail(name + ".states", "must be at least 2");
        if (o.order && *o.order < 1) fail(name + ".order", "must be at least 1");
    }
}

void apply_setting(ForecastConfig& c, std::string_view key, std::string_view value) {
    key = trim(key);
    value = trim(value);
    if (key == "states") {
        c.states = parse_int(key, value);
    } else if (key == "order") {
        c.order = parse_int(key, value);
    } else if (key == "delta") {
        c.delta = parse_double(key, value);
    } else if (key == "nmin") {
        c.n_min = parse_int(key, value);
    } else if (key == "horizon") {
        c.horizon = parse_int(key, value);
    } else if (key == "combined-k") {
        c.combined_k = parse_double(key, value);
    } else if (key == "hierarchy") {
        if (value == "pow2") c.hierarchy = HierarchyKind::powers_of_two;
        else if (value == "smooth") c.hierarchy = HierarchyKind::smooth_products;
        else bad_value(key, value);
    } else if (key == "returns") {
        if (value == "abs") c.returns = ReturnsMode::absolute;
        else if (value == "rel") c.returns = ReturnsMode::relative;
        else bad_value(key, value);
    } else if (key == "quantizer") {
        if (value == "count") c.quantizer = QuantizerMethod::equal_count;
        else if (value == "width") c.quantizer = QuantizerMethod::equal_width;
        else if (value == "combined") c.quantizer = QuantizerMethod::combined;
        else bad_value(key, value);
    } else if (key == "scenario") {
        if (value == "lower") c.scenario = ScenarioSelection::lower;
        else if (value == "upper") c.scenario = ScenarioSelection::upper;
        else if (value == "both") c.scenario = ScenarioSelection::both;
        else bad_value(key, value);
    } else if (key == "center") {
        if (value == "median") c.center = CenterRule::median_state;
        else if (value == "middle") c.center = CenterRule::middle_state;
        else bad_value(key, value);
    } else if (key.starts_with("level.")) {
        // level.<step>.states | level.<step>.order
        const auto rest = key.substr(6);
        const auto dot = rest.find('.');
        if (dot == std::string_view::npos) {
            throw Error(ErrorCode::config_error, "unknown setting '" + std::string(key) + "'",
                        std::string(key));
        }
        const int step = parse_int(key, rest.substr(0, dot));
        const auto field = rest.substr(dot + 1);
        if (field == "states") c.levels[step].states = parse_int(key, value);
        else if (field == "order") c.levels[step].order = parse_int(key, value);
        else throw Error(ErrorCode::config_error, "unknown setting '" + std::string(key) + "'",
                         std::string(key));
    } else {
        throw Error(ErrorCode::config_error, "unknown setting '" + std::string(key) + "'",
                    std::string(key));
    }
}

ForecastConfig parse_config_text(std::string_view text, ForecastConfig base) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw Error(ErrorCode::config_error, "expected 'key = value'",
                        "line " + std::to_string(line_no));
        }
        apply_setting(base, line.substr(0, eq), line.substr(eq + 1));
    }
    return base;
}

std::string to_config_text(const ForecastConfig& c) {
    std::ostringstream out;
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    out << "states = " << c.states << '\n'
        << "order = " << c.order << '\n'
        << "delta = " << c.delta << '\n'
        << "nmin = " << c.n_min << '\n'
        << "horizon = " << c.horizon << '\n'
        << "hierarchy = " << to_string(c.hierarchy) << '\n'
        << "returns = " << to_string(c.returns) << '\n'
        << "quantizer = " << to_string(c.quantizer) << '\n'
        << "combined-k = " << c.combined_k << '\n'
        << "scenario = " << to_string(c.scenario) << '\n'
        << "center = " << to_string(c.center) << '\n';
    for (const auto& [step, o] : c.levels) {
        if (o.states) out << "level." << step << ".states = " << *o.states << '\n';
        if (o.order) out << "level." << step << ".order = " << *o.order << '\n';
    }
    return out.str();
}

std::string_view to_string(HierarchyKind kind) {
    return kind == HierarchyKind::powers_of_two ? "pow2" : "smooth";
}

std::string_view to_string(ReturnsMode mode) {
    return mode == ReturnsMode::absolute ? "abs" : "rel";
}

std::string_view to_string(QuantizerMethod method) {
    switch (method) {
    case QuantizerMethod::equal_count: return "count";
    case QuantizerMethod::equal_width: return "width";
    case QuantizerMethod::combined: return "combined";
    }
    return "count";
}

std::string_view to_string(ScenarioSelection selection) {
    switch (selection) {
    case ScenarioSelection::lower: return "lower";
    case ScenarioSelection::upper: return "upper";
    case ScenarioSelection::both: return "both";
    }
    return "both";
}

std::string_view to_string(Scenario scenario) {
    return scenario == Scenario::lower ? "lower" : "upper";
}

std::string_view to_string(CenterRule rule) {
    return rule == CenterRule::median_state ? "median" : "middle";
}

} // namespace markovcast
