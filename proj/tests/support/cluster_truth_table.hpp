#pragma once

#include "markovcast/markov.hpp"

namespace markovcast::gen {

struct ClusterRow {
    int mask;
    State center;
    State lower;
    State upper;
};

// Frozen output of tests/oracles/cluster_truth_table.py: every nonempty
// subset of five states (bit i set = state i+1), every centre, both
// scenarios.
inline constexpr ClusterRow kClusterTruthTable[] = {
    {1, 1, 1, 1}, {1, 2, 1, 1}, {1, 3, 1, 1}, {1, 4, 1, 1}, {1, 5, 1, 1},
    {2, 1, 2, 2}, {2, 2, 2, 2}, {2, 3, 2, 2}, {2, 4, 2, 2}, {2, 5, 2, 2},
    {3, 1, 1, 1}, {3, 2, 2, 2}, {3, 3, 2, 2}, {3, 4, 2, 2}, {3, 5, 2, 2},
    {4, 1, 3, 3}, {4, 2, 3, 3}, {4, 3, 3, 3}, {4, 4, 3, 3}, {4, 5, 3, 3},
    {5, 1, 1, 1}, {5, 2, 1, 3}, {5, 3, 3, 3}, {5, 4, 3, 3}, {5, 5, 3, 3},
    {6, 1, 2, 2}, {6, 2, 2, 2}, {6, 3, 3, 3}, {6, 4, 3, 3}, {6, 5, 3, 3},
    {7, 1, 2, 2}, {7, 2, 2, 2}, {7, 3, 2, 2}, {7, 4, 2, 2}, {7, 5, 2, 2},
    {8, 1, 4, 4}, {8, 2, 4, 4}, {8, 3, 4, 4}, {8, 4, 4, 4}, {8, 5, 4, 4},
    {9, 1, 1, 1}, {9, 2, 1, 1}, {9, 3, 4, 4}, {9, 4, 4, 4}, {9, 5, 4, 4},
    {10, 1, 2, 2}, {10, 2, 2, 2}, {10, 3, 2, 4}, {10, 4, 4, 4}, {10, 5, 4, 4},
    {11, 1, 1, 1}, {11, 2, 2, 2}, {11, 3, 2, 2}, {11, 4, 2, 2}, {11, 5, 2, 2},
    {12, 1, 3, 3}, {12, 2, 3, 3}, {12, 3, 3, 3}, {12, 4, 4, 4}, {12, 5, 4, 4},
    {13, 1, 3, 3}, {13, 2, 3, 3}, {13, 3, 3, 3}, {13, 4, 4, 4}, {13, 5, 4, 4},
    {14, 1, 3, 3}, {14, 2, 3, 3}, {14, 3, 3, 3}, {14, 4, 3, 3}, {14, 5, 3, 3},
    {15, 1, 2, 2}, {15, 2, 2, 2}, {15, 3, 3, 3}, {15, 4, 3, 3}, {15, 5, 3, 3},
    {16, 1, 5, 5}, {16, 2, 5, 5}, {16, 3, 5, 5}, {16, 4, 5, 5}, {16, 5, 5, 5},
    {17, 1, 1, 1}, {17, 2, 1, 1}, {17, 3, 1, 5}, {17, 4, 5, 5}, {17, 5, 5, 5},
    {18, 1, 2, 2}, {18, 2, 2, 2}, {18, 3, 2, 2}, {18, 4, 5, 5}, {18, 5, 5, 5},
    {19, 1, 1, 1}, {19, 2, 2, 2}, {19, 3, 2, 2}, {19, 4, 2, 2}, {19, 5, 2, 2},
    {20, 1, 3, 3}, {20, 2, 3, 3}, {20, 3, 3, 3}, {20, 4, 3, 5}, {20, 5, 5, 5},
    {21, 1, 3, 3}, {21, 2, 3, 3}, {21, 3, 3, 3}, {21, 4, 3, 3}, {21, 5, 3, 3},
    {22, 1, 2, 2}, {22, 2, 2, 2}, {22, 3, 3, 3}, {22, 4, 3, 3}, {22, 5, 3, 3},
    {23, 1, 2, 2}, {23, 2, 2, 2}, {23, 3, 2, 2}, {23, 4, 2, 2}, {23, 5, 2, 2},
    {24, 1, 4, 4}, {24, 2, 4, 4}, {24, 3, 4, 4}, {24, 4, 4, 4}, {24, 5, 5, 5},
    {25, 1, 4, 4}, {25, 2, 4, 4}, {25, 3, 4, 4}, {25, 4, 4, 4}, {25, 5, 5, 5},
    {26, 1, 4, 4}, {26, 2, 4, 4}, {26, 3, 4, 4}, {26, 4, 4, 4}, {26, 5, 5, 5},
    {27, 1, 1, 1}, {27, 2, 2, 2}, {27, 3, 2, 4}, {27, 4, 4, 4}, {27, 5, 5, 5},
    {28, 1, 4, 4}, {28, 2, 4, 4}, {28, 3, 4, 4}, {28, 4, 4, 4}, {28, 5, 4, 4},
    {29, 1, 4, 4}, {29, 2, 4, 4}, {29, 3, 4, 4}, {29, 4, 4, 4}, {29, 5, 4, 4},
    {30, 1, 3, 3}, {30, 2, 3, 3}, {30, 3, 3, 3}, {30, 4, 4, 4}, {30, 5, 4, 4},
    {31, 1, 3, 3}, {31, 2, 3, 3}, {31, 3, 3, 3}, {31, 4, 3, 3}, {31, 5, 3, 3},
};

} // namespace markovcast::gen
