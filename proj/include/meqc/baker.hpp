#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "meqc/colouring.hpp"
#include "meqc/exact.hpp"
#include "meqc/graph.hpp"

namespace meqc {

// Schedule of stratification widths r_1, r_2, ...  The default rule
// r_i = 10*p*q*i^2 keeps the accumulated loss below 1/p at any depth; an
// explicit schedule repeats its last term once exhausted.
class RSequence {
public:
    static RSequence defaulted(int p, int q);
    static RSequence from_terms(std::vector<std::int64_t> terms);

    std::int64_t at(int i) const; // 1-based

private:
    RSequence() = default;

    std::vector<std::int64_t> terms_;
    std::int64_t rule_factor_ = 0; // 10*p*q when rule-based
};

RSequence default_r_sequence(int p, int q);

// Product of (1 - 6q/r_i) for i = 1..k; 0 once any factor is non-positive.
double guarantee_product(const RSequence& rs, int k, int q);

// One position of the layering game.  `depth` is the 1-based round index;
// `layering_played` records whether a layering move occurred on this branch.
struct GameState {
    Graph graph;
    std::set<int> s_set;
    int depth = 1;
    bool layering_played = false;
    std::vector<std::string> trace;
};

struct DeleteVertexMove {
    int v;
};

struct LayeringMove {
    Layering lam;
};

using DestroyerMove = std::variant<DeleteVertexMove, LayeringMove>;

// Successor positions.  A vertex deletion yields one state with the deleted
// vertex's neighbours added to the boundary; a layering with width r yields,
// for every residue m in [0, r) and every part of the stratification, the
// part's induced subgraph with the cut endpoints joined to the boundary.
std::vector<GameState> apply_destroyer_move(const GameState& state, const DestroyerMove& move,
                                            std::int64_t r);

struct StrategyConfig {
    std::set<int> apexes;
};

using Strategy = std::function<DestroyerMove(const GameState&)>;

// Default policy: delete a declared apex while one is present; otherwise play
// a BFS layering once per branch; after that delete a maximum-degree vertex
// (ties broken by lowest id).
DestroyerMove planar_destroyer(const GameState& state, const StrategyConfig& config);

// Named strategies: "planar-bfs" (the default policy above), "apex-first"
// (apexes, then maximum-degree deletions, no layering), "delete-max-degree".
Strategy make_strategy(const std::string& name, const StrategyConfig& config);

struct PtasReport {
    int value = 0;
    EdgeColouring witness;
    std::optional<double> certified_ratio; // in (0,1] when every leaf certified
    int rounds_used = 0;                   // deepest chain of moves explored
    bool base_cases_optimal = false;
};

// Approximation by recursive stratification: each round either certifies a
// small instance exactly or takes a strategy move; layering moves branch over
// every residue and keep the best.  The result is always composable.  When
// the depth budget runs out the residual subgraph falls back to its matching
// colouring and the report is left uncertified.
PtasReport ptas_solve(const Instance& inst, const RSequence& rs, const Strategy& strategy,
                      int depth_budget, const SolveLimits& limits = {}, bool parallel = false);

} // namespace meqc
