#pragma once

#include <map>
#include <optional>

#include "meqc/colouring.hpp"
#include "meqc/graph.hpp"

namespace meqc {

struct SolveLimits {
    int max_edges_exhaustive = 18;
    std::optional<int> max_classes;
};

struct SolveResult {
    int value = 0;
    EdgeColouring witness;
    bool optimal = false;
};

// Exhaustive search over edge partitions (canonical restricted-growth form
// with a designated zero class), maximising the number of non-zero classes
// subject to composability.  Requires q >= 2; throws TooLargeError when the
// edge count exceeds limits.max_edges_exhaustive.
SolveResult exact_composable_spread(const Instance& inst, const SolveLimits& limits = {});

// Closed form for q = 1: colour 0 on every component touching the s-set, one
// fresh colour per remaining component that contains an edge.
SolveResult exact_q1(const Instance& inst);

// Dispatches on q.
SolveResult solve_exact(const Instance& inst, const SolveLimits& limits = {});

// Fixed-parameter routine: if the greedy maximal matching reaches size s the
// matching colouring (value >= s, not optimal) is returned; otherwise the
// instance has a small vertex cover and is solved exactly.
SolveResult bounded_solver(const Instance& inst, long long s, const SolveLimits& limits = {});

// Matching sandwich: |M| <= opt <= 2q|M| for any maximal matching M.
struct BoundsResult {
    int lower = 0;
    int upper = 0;
    Matching matching;
};

BoundsResult bounds(const Instance& inst);

// Exact maximum number of distinct colours (colour 0 counts) over edge
// colourings in which vertex v sees at most budgets(v) colours.
struct GSpreadResult {
    int value = 0;
    EdgeColouring witness;
};

GSpreadResult exact_g_spread(const Graph& g, const std::map<int, int>& budgets,
                             const SolveLimits& limits = {});

} // namespace meqc
