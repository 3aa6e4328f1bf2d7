#include <gtest/gtest.h>

#include <random>

#include "markovcast/config.hpp"
#include "markovcast/error.hpp"

using namespace markovcast;

TEST(ForecastConfig, Defaults) {
    const ForecastConfig c;
    EXPECT_EQ(c.states, 4);
    EXPECT_EQ(c.order, 2);
    EXPECT_EQ(c.delta, 0.0);
    EXPECT_EQ(c.n_min, 1);
    EXPECT_EQ(c.hierarchy, HierarchyKind::powers_of_two);
    EXPECT_EQ(c.returns, ReturnsMode::relative);
    EXPECT_EQ(c.quantizer, QuantizerMethod::equal_count);
    EXPECT_EQ(c.combined_k, 3.0);
    EXPECT_EQ(c.scenario, ScenarioSelection::both);
    EXPECT_EQ(c.center, CenterRule::median_state);
}

TEST(ForecastConfig, PerLevelOverrides) {
    const auto c = parse_config_text("states = 5\nlevel.4.states = 8\nlevel.2.order = 3\n");
    EXPECT_EQ(c.states_at(1), 5);
    EXPECT_EQ(c.states_at(4), 8);
    EXPECT_EQ(c.order_at(2), 3);
    EXPECT_EQ(c.order_at(4), 2);
}

TEST(ForecastConfig, TextRoundTrip) {
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        ForecastConfig c;
        c.states = 2 + static_cast<int>(rng() % 10);
        c.order = 1 + static_cast<int>(rng() % 4);
        c.delta = u(rng);
        c.n_min = 1 + static_cast<int>(rng() % 5);
        c.horizon = 1 + static_cast<int>(rng() % 200);
        c.hierarchy = rng() % 2 ? HierarchyKind::smooth_products : HierarchyKind::powers_of_two;
        c.returns = rng() % 2 ? ReturnsMode::absolute : ReturnsMode::relative;
        c.quantizer = static_cast<QuantizerMethod>(rng() % 3);
        c.combined_k = 0.5 + 4.0 * u(rng);
        c.scenario = static_cast<ScenarioSelection>(rng() % 3);
        c.center = rng() % 2 ? CenterRule::middle_state : CenterRule::median_state;
        if (rng() % 2) c.levels[4] = LevelOverride{3, std::nullopt};
        if (rng() % 2) c.levels[8] = LevelOverride{std::nullopt, 1};
        EXPECT_EQ(parse_config_text(to_config_text(c)), c);
    }
}

TEST(ForecastConfig, LayeredPrecedence) {
    // defaults < file < flags
    ForecastConfig c = parse_config_text("# file\nstates = 6\norder = 3\ndelta = 0.1\n");
    apply_setting(c, "order", "1");
    EXPECT_EQ(c.states, 6);    // from file
    EXPECT_EQ(c.order, 1);     // flag wins
    EXPECT_EQ(c.delta, 0.1);   // from file
    EXPECT_EQ(c.horizon, 16);  // default
}

TEST(ForecastConfig, Errors) {
    auto code = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::usage_error;
    };
    EXPECT_EQ(code([] { parse_config_text("colour = blue"); }), ErrorCode::config_error);
    EXPECT_EQ(code([] { parse_config_text("states = four"); }), ErrorCode::config_error);
    EXPECT_EQ(code([] { parse_config_text("just words"); }), ErrorCode::config_error);
    EXPECT_EQ(code([] { parse_config_text("hierarchy = fib"); }), ErrorCode::config_error);
    EXPECT_EQ(code([] { parse_config_text("level.x.states = 3"); }), ErrorCode::config_error);
    EXPECT_EQ(code([] { parse_config_text("delta = 2").validate(); }), ErrorCode::config_error);
    EXPECT_EQ(code([] { parse_config_text("states = 1").validate(); }), ErrorCode::config_error);
}
