#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "markovcast/quantizer.hpp"

namespace markovcast {

enum class Scenario { lower, upper };

/// Probabilities closer than this are treated as equal when testing
/// membership in a candidate set.
inline constexpr double kProbabilityTolerance = 1e-12;

/// Sparse next-state counts for every observed history of length 0..order.
/// Length-0 is the marginal state distribution; shorter histories are the
/// back-off levels used when a full-order history is too rare.
class TransitionTable {
public:
    using History = std::vector<State>;

    struct Row {
        std::vector<std::uint64_t> counts; // size s, index state-1
        std::uint64_t total = 0;
    };

    int order() const noexcept { return order_; }
    int states() const noexcept { return s_; }

    /// Observed row for `history` (any length 0..order), or nullptr.
    const Row* find(std::span<const State> history) const;
    std::uint64_t history_total(std::span<const State> history) const;
    /// Zero for an unseen history.
    double probability(std::span<const State> history, State next) const;
    /// Empty for an unseen history.
    std::vector<double> probabilities(std::span<const State> history) const;

    /// All observed rows for histories of exactly `length` states.
    const std::map<History, Row>& rows(int length) const;

private:
    TransitionTable(int order, int s);

    int order_;
    int s_;
    std::vector<std::map<History, Row>> by_length_;

    friend TransitionTable estimate_transitions(std::span<const StateSequence>, int);
};

/// Counts every window of `order` states followed by one state. Throws
/// size_error when the sequence is shorter than order + 1.
TransitionTable estimate_transitions(const StateSequence& states, int order);

/// Pools windows from several sequences over one alphabet (e.g. the phase
/// sub-sequences of a strided sampling). At least one sequence must be
/// longer than `order`.
TransitionTable estimate_transitions(std::span<const StateSequence> sequences, int order);

struct CandidateSet {
    std::vector<State> states; // ascending, nonempty
    double max_prob = 0.0;
    int effective_order = 0;
};

/// States within `delta` of the most probable one; probs[i] belongs to state i+1.
CandidateSet candidates_from_probabilities(std::span<const double> probs, double delta);

/// Candidates for the state following `history`. Only the trailing
/// order() states of `history` are used. When that history was seen fewer
/// than `n_min` times, the oldest state is dropped and the shorter history
/// is tried, down to the marginal distribution.
CandidateSet next_state_candidates(const TransitionTable& table, std::span<const State> history,
                                   double delta, int n_min);

struct Selection {
    State state = 0;
    bool bifurcation = false;
};

/// Picks one state out of a candidate set:
///  1. group candidates into runs of consecutive states and keep the largest;
///  2. an odd run yields its middle state;
///  3. an even run yields whichever middle state is closer to `center`;
///  4. a tie there is a bifurcation, resolved low or high by `scenario`;
///  5. several largest runs are replaced by their picks and steps 2-4 are
///     applied to that ordered list.
Selection select_state(std::span<const State> candidates, State center, Scenario scenario);
Selection select_state(const CandidateSet& candidates, State center, Scenario scenario);

struct PredictionOptions {
    double delta = 0.0;
    int n_min = 1;
    State center = 1;
    Scenario scenario = Scenario::lower;
};

struct BifurcationEvent {
    int step = 0; // 0-based position in the predicted sequence
    std::vector<State> candidates;
    State chosen = 0;
};

struct Rollout {
    StateSequence states;
    std::vector<BifurcationEvent> bifurcations;
};

/// Rolls the chain forward `horizon` steps from `seed`, always taking the
/// selected most probable state.
Rollout predict_states(const TransitionTable& table, std::span<const State> seed, int horizon,
                       const PredictionOptions& options, int step = 1);

} // namespace markovcast
