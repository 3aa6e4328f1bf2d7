#include <gtest/gtest.h>

#include <map>
#include <random>

#include "markovcast/error.hpp"
#include "markovcast/markov.hpp"
#include "support/generators.hpp"

using namespace markovcast;

namespace {

StateSequence seq(std::vector<State> v, int s) { return StateSequence{std::move(v), s, 1}; }

// Brute-force recount: for a history h, count windows h followed by x.
std::map<std::vector<State>, std::vector<int>> recount(const std::vector<State>& st, int s, int len) {
    std::map<std::vector<State>, std::vector<int>> out;
    for (std::size_t i = 0; i + static_cast<std::size_t>(len) < st.size(); ++i) {
        std::vector<State> h(st.begin() + static_cast<std::ptrdiff_t>(i),
                             st.begin() + static_cast<std::ptrdiff_t>(i) + len);
        auto& row = out[h];
        row.resize(static_cast<std::size_t>(s), 0);
        ++row[static_cast<std::size_t>(st[i + static_cast<std::size_t>(len)] - 1)];
    }
    return out;
}

} // namespace

TEST(EstimateTransitions, AlternatingOrderOne) {
    const auto t = estimate_transitions(seq({1, 2, 1, 2, 1}, 2), 1);
    const std::vector<State> h1{1}, h2{2};
    EXPECT_DOUBLE_EQ(t.probability(h1, 2), 1.0);
    EXPECT_DOUBLE_EQ(t.probability(h2, 1), 1.0);
    EXPECT_EQ(t.history_total(h1), 2u);
}

TEST(EstimateTransitions, AlternatingOrderTwo) {
    const auto t = estimate_transitions(seq({1, 2, 1, 2, 1}, 2), 2);
    const std::vector<State> h12{1, 2}, h21{2, 1};
    EXPECT_DOUBLE_EQ(t.probability(h12, 1), 1.0);
    EXPECT_DOUBLE_EQ(t.probability(h21, 2), 1.0);
}

TEST(EstimateTransitions, SplitCounts) {
    const auto t = estimate_transitions(seq({1, 1, 2, 2}, 2), 1);
    const std::vector<State> h1{1};
    EXPECT_DOUBLE_EQ(t.probability(h1, 1), 0.5);
    EXPECT_DOUBLE_EQ(t.probability(h1, 2), 0.5);
}

TEST(EstimateTransitions, Errors) {
    try {
        estimate_transitions(seq({1, 2}, 2), 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::size_error);
    }
    EXPECT_THROW(estimate_transitions(seq({1, 3, 1}, 2), 1), Error);
}

TEST(EstimateTransitions, PoolsSeveralSequences) {
    const std::vector<StateSequence> phases{seq({1, 2, 1}, 2), seq({2, 2}, 2)};
    const auto t = estimate_transitions(phases, 1);
    const std::vector<State> h1{1}, h2{2};
    EXPECT_EQ(t.history_total(h1), 1u);
    EXPECT_EQ(t.history_total(h2), 2u);
    EXPECT_DOUBLE_EQ(t.probability(h2, 1), 0.5);
    // Windows never straddle two sequences.
    EXPECT_EQ(t.rows(0).begin()->second.total, 5u);
}

TEST(TransitionProperties, RowStochasticAndMatchesRecount) {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> pick_s(2, 4), pick_r(1, 3), pick_len(5, 50);
    for (int trial = 0; trial < 200; ++trial) {
        const int s = pick_s(rng), r = pick_r(rng);
        const auto st = gen::random_states(rng, s, static_cast<std::size_t>(pick_len(rng)));
        const auto t = estimate_transitions(seq(st, s), r);
        for (int len = 0; len <= r; ++len) {
            const auto brute = recount(st, s, len);
            ASSERT_EQ(t.rows(len).size(), brute.size());
            for (const auto& [h, counts] : brute) {
                const auto probs = t.probabilities(h);
                int total = 0;
                for (int c : counts) total += c;
                double sum = 0.0;
                for (int x = 1; x <= s; ++x) {
                    EXPECT_EQ(probs[static_cast<std::size_t>(x - 1)],
                              static_cast<double>(counts[static_cast<std::size_t>(x - 1)]) / total);
                    EXPECT_GE(probs[static_cast<std::size_t>(x - 1)], 0.0);
                    sum += probs[static_cast<std::size_t>(x - 1)];
                }
                EXPECT_NEAR(sum, 1.0, 1e-12);
            }
        }
    }
}

TEST(NextStateCandidates, FromTable) {
    const auto t = estimate_transitions(seq({1, 2, 1, 2, 1}, 2), 1);
    const std::vector<State> h{1};
    const auto c = next_state_candidates(t, h, 0.0, 1);
    EXPECT_EQ(c.states, (std::vector<State>{2}));
    EXPECT_DOUBLE_EQ(c.max_prob, 1.0);
    EXPECT_EQ(c.effective_order, 1);
}

TEST(NextStateCandidates, DeltaWindow) {
    const std::vector<double> probs{0.4, 0.35, 0.25};
    EXPECT_EQ(candidates_from_probabilities(probs, 0.05).states, (std::vector<State>{1, 2}));
    EXPECT_EQ(candidates_from_probabilities(probs, 0.0).states, (std::vector<State>{1}));
    EXPECT_EQ(candidates_from_probabilities(probs, 0.15).states, (std::vector<State>{1, 2, 3}));
    EXPECT_THROW(candidates_from_probabilities(probs, 1.5), Error);
}

TEST(NextStateCandidates, UnseenHistoryFallsBackToMarginal) {
    // Marginal counts: 1 x3, 2 x1, 3 x1.
    // State 4 never occurs, so no history ending in it has been seen.
    const auto t = estimate_transitions(seq({1, 2, 1, 3, 1}, 4), 2);
    const std::vector<State> unseen{4, 4};
    const auto c = next_state_candidates(t, unseen, 0.0, 1);
    EXPECT_EQ(c.effective_order, 0);
    EXPECT_EQ(c.states, (std::vector<State>{1}));
    EXPECT_DOUBLE_EQ(c.max_prob, 0.6);
}

TEST(NextStateCandidates, NMinBacksOffOneStateAtATime) {
    // (1,2) is followed by 3 once; (2) is followed by 3 once and by 1 twice.
    const auto t = estimate_transitions(seq({2, 1, 2, 1, 1, 2, 3, 3}, 3), 2);
    const std::vector<State> h{1, 2};
    EXPECT_EQ(t.history_total(h), 2u);
    EXPECT_EQ(next_state_candidates(t, h, 0.0, 1).effective_order, 2);
    const auto backed = next_state_candidates(t, h, 0.0, 3);
    EXPECT_EQ(backed.effective_order, 1);
    EXPECT_EQ(backed.states, (std::vector<State>{1}));
    EXPECT_EQ(next_state_candidates(t, h, 0.0, 100).effective_order, 0);
}

TEST(NextStateCandidates, UsesOnlyTrailingOrderStates) {
    const auto t = estimate_transitions(seq({1, 2, 1, 2, 1}, 2), 1);
    const std::vector<State> long_history{2, 2, 2, 1};
    EXPECT_EQ(next_state_candidates(t, long_history, 0.0, 1).states, (std::vector<State>{2}));
}

TEST(PredictStates, PeriodicSequenceContinues) {
    std::vector<State> train;
    for (int i = 0; i < 4; ++i) train.insert(train.end(), {1, 2, 3});
    const auto t = estimate_transitions(seq(train, 3), 2);
    const std::vector<State> seed{2, 3};
    for (auto sc : {Scenario::lower, Scenario::upper}) {
        const auto out = predict_states(t, seed, 6, {0.0, 1, 2, sc});
        EXPECT_EQ(out.states.states, (std::vector<State>{1, 2, 3, 1, 2, 3}));
        EXPECT_TRUE(out.bifurcations.empty());
    }
}

TEST(PredictStates, HorizonBounds) {
    const auto t = estimate_transitions(seq({1, 2, 1, 2, 1}, 2), 1);
    const std::vector<State> seed{1};
    EXPECT_THROW(predict_states(t, seed, 0, {}), Error);
    EXPECT_EQ(predict_states(t, seed, 1, {}).states.states.size(), 1u);
}

TEST(PredictStates, BifurcationIsLoggedAndSplitsScenarios) {
    // After 2 comes 1 or 3 equally often; with centre 2 that is a bifurcation.
    const auto t = estimate_transitions(seq({2, 1, 2, 3, 2, 1, 2, 3, 2}, 3), 1);
    const std::vector<State> seed{2};
    const auto lo = predict_states(t, seed, 1, {0.0, 1, 2, Scenario::lower});
    const auto hi = predict_states(t, seed, 1, {0.0, 1, 2, Scenario::upper});
    EXPECT_EQ(lo.states.states, (std::vector<State>{1}));
    EXPECT_EQ(hi.states.states, (std::vector<State>{3}));
    ASSERT_EQ(lo.bifurcations.size(), 1u);
    EXPECT_EQ(lo.bifurcations[0].candidates, (std::vector<State>{1, 3}));
}

TEST(PredictStates, ScenariosAgreeWithoutBifurcation) {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const auto st = gen::random_states(rng, 4, 40);
        const auto t = estimate_transitions(seq(st, 4), 2);
        const std::vector<State> seed(st.end() - 2, st.end());
        const auto lo = predict_states(t, seed, 12, {0.1, 1, 2, Scenario::lower});
        const auto hi = predict_states(t, seed, 12, {0.1, 1, 2, Scenario::upper});
        if (lo.bifurcations.empty()) {
            EXPECT_EQ(lo.states.states, hi.states.states);
        }
        const auto again = predict_states(t, seed, 12, {0.1, 1, 2, Scenario::lower});
        EXPECT_EQ(again.states.states, lo.states.states);
    }
}

// An order-r chain over states is an order-1 chain over r-tuples. Build the
// tuple chain independently and check both probabilities and rollouts.
TEST(GeneralizedStates, OrderRMatchesFirstOrderTupleChain) {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> pick_s(2, 4), pick_r(1, 3), pick_len(8, 50);
    for (int trial = 0; trial < 200; ++trial) {
        const int s = pick_s(rng), r = pick_r(rng);
        const auto st = gen::random_states(rng, s, static_cast<std::size_t>(pick_len(rng)));
        const auto table = estimate_transitions(seq(st, s), r);

        using Tuple = std::vector<State>;
        std::vector<Tuple> tuples;
        for (std::size_t i = 0; i + static_cast<std::size_t>(r) <= st.size(); ++i) {
            tuples.emplace_back(st.begin() + static_cast<std::ptrdiff_t>(i),
                                st.begin() + static_cast<std::ptrdiff_t>(i) + r);
        }
        std::map<Tuple, std::map<Tuple, int>> chain;
        for (std::size_t j = 0; j + 1 < tuples.size(); ++j) {
            ++chain[tuples[j]][tuples[j + 1]];
        }
        auto tuple_probs = [&](const Tuple& h) {
            std::vector<double> p(static_cast<std::size_t>(s), 0.0);
            int total = 0;
            for (const auto& [next, c] : chain.at(h)) total += c;
            for (const auto& [next, c] : chain.at(h)) {
                p[static_cast<std::size_t>(next.back() - 1)] += static_cast<double>(c) / total;
            }
            return p;
        };
        for (const auto& [h, _] : chain) {
            const auto expected = tuple_probs(h);
            const auto got = table.probabilities(h);
            ASSERT_EQ(got.size(), expected.size());
            for (std::size_t x = 0; x < got.size(); ++x) {
                EXPECT_NEAR(got[x], expected[x], 1e-15);
            }
        }

        // Rollouts agree for as long as the tuple chain has an outgoing edge.
        for (auto sc : {Scenario::lower, Scenario::upper}) {
            const PredictionOptions opts{0.05, 1, (s + 2) / 2, sc};
            Tuple cur = tuples.back();
            const auto rollout = predict_states(table, cur, 10, opts);
            for (State predicted : rollout.states.states) {
                if (!chain.contains(cur)) break;
                const auto cands = candidates_from_probabilities(tuple_probs(cur), opts.delta);
                const State expected = select_state(cands, opts.center, sc).state;
                ASSERT_EQ(predicted, expected);
                cur.erase(cur.begin());
                cur.push_back(expected);
            }
        }
    }
}
