#include "markovcast/markov.hpp"

#include <algorithm>
#include <string>

#include "markovcast/error.hpp"

namespace markovcast {
namespace {

std::vector<std::vector<State>> runs_of_consecutive(std::span<const State> sorted) {
    std::vector<std::vector<State>> runs;
    for (State st : sorted) {
        if (runs.empty() || st != runs.back().back() + 1) {
            runs.push_back({st});
        } else {
            runs.back().push_back(st);
        }
    }
    return runs;
}

Selection central_element(std::span<const State> elems, State center, Scenario scenario) {
    const auto k = elems.size();
    if (k % 2 == 1) {
        return {elems[k / 2], false};
    }
    const State a = elems[k / 2 - 1];
    const State b = elems[k / 2];
    const int da = std::abs(a - center);
    const int db = std::abs(b - center);
    if (da != db) {
        return {da < db ? a : b, false};
    }
    return {scenario == Scenario::lower ? a : b, true};
}

} // namespace

TransitionTable::TransitionTable(int order, int s)
    : order_(order), s_(s), by_length_(static_cast<std::size_t>(order) + 1) {}

const TransitionTable::Row* TransitionTable::find(std::span<const State> history) const {
    if (history.size() > static_cast<std::size_t>(order_)) {
        return nullptr;
    }
    const auto& rows = by_length_[history.size()];
    const auto it = rows.find(History(history.begin(), history.end()));
    return it == rows.end() ? nullptr : &it->second;
}

std::uint64_t TransitionTable::history_total(std::span<const State> history) const {
    const Row* row = find(history);
    return row ? row->total : 0;
}

double TransitionTable::probability(std::span<const State> history, State next) const {
    const Row* row = find(history);
    if (!row || next < 1 || next > s_) {
        return 0.0;
    }
    return static_cast<double>(row->counts[static_cast<std::size_t>(next - 1)]) /
           static_cast<double>(row->total);
}

std::vector<double> TransitionTable::probabilities(std::span<const State> history) const {
    const Row* row = find(history);
    if (!row) {
        return {};
    }
    std::vector<double> out;
    out.reserve(row->counts.size());
    for (auto c : row->counts) {
        out.push_back(static_cast<double>(c) / static_cast<double>(row->total));
    }
    return out;
}

const std::map<TransitionTable::History, TransitionTable::Row>&
TransitionTable::rows(int length) const {
    if (length < 0 || length > order_) {
        throw Error(ErrorCode::domain_error, "history length outside 0..order");
    }
    return by_length_[static_cast<std::size_t>(length)];
}

TransitionTable estimate_transitions(const StateSequence& states, int order) {
    if (order >= 1 && states.states.size() < static_cast<std::size_t>(order) + 1) {
        throw Error(ErrorCode::size_error,
                    "order " + std::to_string(order) + " needs at least " +
                        std::to_string(order + 1) + " states, got " +
                        std::to_string(states.states.size()));
    }
    return estimate_transitions(std::span<const StateSequence>(&states, 1), order);
}

TransitionTable estimate_transitions(std::span<const StateSequence> sequences, int order) {
    if (order < 1) {
        throw Error(ErrorCode::domain_error, "Markov order must be at least 1");
    }
    if (sequences.empty()) {
        throw Error(ErrorCode::size_error, "no state sequences to estimate from");
    }
    const int s = sequences.front().s;
    const auto need = static_cast<std::size_t>(order) + 1;
    bool long_enough = false;
    for (const auto& seq : sequences) {
        if (seq.s != s) {
            throw Error(ErrorCode::contract_error, "state sequences use different alphabets");
        }
        for (State st : seq.states) {
            if (st < 1 || st > s) {
                throw Error(ErrorCode::domain_error,
                            "state " + std::to_string(st) + " outside 1.." + std::to_string(s));
            }
        }
        long_enough = long_enough || seq.states.size() >= need;
    }
    if (!long_enough) {
        throw Error(ErrorCode::size_error,
                    "order " + std::to_string(order) + " needs a sequence of at least " +
                        std::to_string(need) + " states");
    }

    TransitionTable table(order, s);
    for (const auto& seq : sequences) {
        const auto& st = seq.states;
        for (std::size_t len = 0; len <= static_cast<std::size_t>(order); ++len) {
            auto& rows = table.by_length_[len];
            for (std::size_t i = 0; i + len < st.size(); ++i) {
                TransitionTable::History h(st.begin() + static_cast<std::ptrdiff_t>(i),
                                           st.begin() + static_cast<std::ptrdiff_t>(i + len));
                auto& row = rows[std::move(h)];
                if (row.counts.empty()) {
                    row.counts.assign(static_cast<std::size_t>(s), 0);
                }
                ++row.counts[static_cast<std::size_t>(st[i + len] - 1)];
                ++row.total;
            }
        }
    }
    return table;
}

CandidateSet candidates_from_probabilities(std::span<const double> probs, double delta) {
    if (probs.empty()) {
        throw Error(ErrorCode::size_error, "empty probability vector");
    }
    if (!(delta >= 0.0 && delta <= 1.0)) {
        throw Error(ErrorCode::domain_error, "delta must lie in [0, 1]");
    }
    CandidateSet out;
    out.max_prob = *std::max_element(probs.begin(), probs.end());
    const double threshold = out.max_prob - delta - kProbabilityTolerance;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] >= threshold) {
            out.states.push_back(static_cast<State>(i) + 1);
        }
    }
    return out;
}

CandidateSet next_state_candidates(const TransitionTable& table, std::span<const State> history,
                                   double delta, int n_min) {
    if (n_min < 1) {
        throw Error(ErrorCode::domain_error, "n_min must be at least 1");
    }
    auto h = history.size() > static_cast<std::size_t>(table.order())
                 ? history.last(static_cast<std::size_t>(table.order()))
                 : history;
    while (!h.empty() && table.history_total(h) < static_cast<std::uint64_t>(n_min)) {
        h = h.subspan(1);
    }
    CandidateSet out = candidates_from_probabilities(table.probabilities(h), delta);
    out.effective_order = static_cast<int>(h.size());
    return out;
}

Selection select_state(std::span<const State> candidates, State center, Scenario scenario) {
    if (candidates.empty()) {
        throw Error(ErrorCode::contract_error, "cannot select from an empty candidate set");
    }
    std::vector<State> sorted(candidates.begin(), candidates.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    const auto runs = runs_of_consecutive(sorted);
    std::size_t largest = 0;
    for (const auto& r : runs) {
        largest = std::max(largest, r.size());
    }
    std::vector<const std::vector<State>*> top;
    for (const auto& r : runs) {
        if (r.size() == largest) {
            top.push_back(&r);
        }
    }
    if (top.size() == 1) {
        return central_element(*top.front(), center, scenario);
    }

    std::vector<State> picks;
    bool bifurcation = false;
    for (const auto* r : top) {
        const auto sel = central_element(*r, center, scenario);
        picks.push_back(sel.state);
        bifurcation = bifurcation || sel.bifurcation;
    }
    auto sel = central_element(picks, center, scenario);
    sel.bifurcation = sel.bifurcation || bifurcation;
    return sel;
}

Selection select_state(const CandidateSet& candidates, State center, Scenario scenario) {
    return select_state(candidates.states, center, scenario);
}

Rollout predict_states(const TransitionTable& table, std::span<const State> seed, int horizon,
                       const PredictionOptions& options, int step) {
    if (horizon < 1) {
        throw Error(ErrorCode::domain_error, "prediction horizon must be at least 1");
    }
    Rollout out;
    out.states = StateSequence{{}, table.states(), step};
    out.states.states.reserve(static_cast<std::size_t>(horizon));

    std::vector<State> history(seed.begin(), seed.end());
    for (int k = 0; k < horizon; ++k) {
        const auto candidates = next_state_candidates(table, history, options.delta, options.n_min);
        const auto sel = select_state(candidates, options.center, options.scenario);
        if (sel.bifurcation) {
            out.bifurcations.push_back({k, candidates.states, sel.state});
        }
        out.states.states.push_back(sel.state);
        history.push_back(sel.state);
    }
    return out;
}

} // namespace markovcast
