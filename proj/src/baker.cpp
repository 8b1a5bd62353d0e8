#include "meqc/baker.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "meqc/errors.hpp"

namespace meqc {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

int max_degree_vertex(const Graph& g) {
    std::vector<int> order(g.vertices());
    std::sort(order.begin(), order.end());
    int best = order.front();
    for (int v : order)
        if (g.degree(v) > g.degree(best)) best = v;
    return best;
}

std::set<int> next_s_after_delete(const Graph& g, const std::set<int>& s_set, int v) {
    std::set<int> out(s_set);
    out.erase(v);
    for (int w : g.neighbours(v)) out.insert(w);
    return out;
}

// Shift the non-zero colours of `src` up by `offset` and add them to `dst`.
void merge_shifted(EdgeColouring& dst, const EdgeColouring& src, int offset) {
    for (const auto& [e, c] : src.colour) dst.set(e, c == 0 ? 0 : c + offset);
}

} // namespace

RSequence RSequence::defaulted(int p, int q) {
    if (p < 2 || q < 2) throw std::invalid_argument("default schedule requires p, q >= 2");
    RSequence rs;
    rs.rule_factor_ = 10LL * p * q;
    return rs;
}

RSequence RSequence::from_terms(std::vector<std::int64_t> terms) {
    if (terms.empty()) throw std::invalid_argument("schedule needs at least one term");
    for (std::int64_t r : terms)
        if (r < 2) throw std::invalid_argument("schedule terms must be at least 2");
    RSequence rs;
    rs.terms_ = std::move(terms);
    return rs;
}

std::int64_t RSequence::at(int i) const {
    if (i < 1) throw std::invalid_argument("schedule index is 1-based");
    if (!terms_.empty())
        return terms_[std::min<size_t>(i, terms_.size()) - 1];
    return rule_factor_ * i * i;
}

RSequence default_r_sequence(int p, int q) { return RSequence::defaulted(p, q); }

double guarantee_product(const RSequence& rs, int k, int q) {
    if (k < 0) throw std::invalid_argument("negative round count");
    double product = 1.0;
    for (int i = 1; i <= k; ++i) {
        double factor = 1.0 - 6.0 * q / static_cast<double>(rs.at(i));
        if (factor <= 0.0) return 0.0;
        product *= factor;
    }
    return product;
}

std::vector<GameState> apply_destroyer_move(const GameState& state, const DestroyerMove& move,
                                            std::int64_t r) {
    if (const auto* del = std::get_if<DeleteVertexMove>(&move)) {
        if (!state.graph.has_vertex(del->v))
            throw std::invalid_argument("move deletes unknown vertex " + std::to_string(del->v));
        GameState next;
        next.graph = delete_vertex(state.graph, del->v);
        next.s_set = next_s_after_delete(state.graph, state.s_set, del->v);
        next.depth = state.depth + 1;
        next.layering_played = state.layering_played;
        next.trace = state.trace;
        next.trace.push_back("delete " + std::to_string(del->v));
        return {std::move(next)};
    }

    const auto& lam = std::get<LayeringMove>(move).lam;
    if (r < 2) throw std::invalid_argument("layering move needs r >= 2");
    if (r > 1000000) throw std::invalid_argument("layering width too large to branch over");
    if (!is_valid_layering(state.graph, lam))
        throw std::invalid_argument("move proposes an invalid layering");

    std::vector<GameState> out;
    for (int m = 0; m < r; ++m) {
        Stratification strat = stratify(state.graph, lam, static_cast<int>(r), m);
        for (size_t p = 0; p < strat.parts.size(); ++p) {
            std::set<int> keep(strat.parts[p].begin(), strat.parts[p].end());
            GameState next;
            next.graph = strat.residual.induced(keep);
            for (int v : strat.parts[p])
                if (state.s_set.contains(v) || strat.boundary.contains(v)) next.s_set.insert(v);
            next.depth = state.depth + 1;
            next.layering_played = true;
            next.trace = state.trace;
            next.trace.push_back("layer r=" + std::to_string(r) + " m=" + std::to_string(m) +
                                 " part=" + std::to_string(p));
            out.push_back(std::move(next));
        }
    }
    return out;
}

DestroyerMove planar_destroyer(const GameState& state, const StrategyConfig& config) {
    for (int a : config.apexes)
        if (state.graph.has_vertex(a)) return DeleteVertexMove{a};
    if (!state.layering_played) return LayeringMove{bfs_layering(state.graph)};
    return DeleteVertexMove{max_degree_vertex(state.graph)};
}

Strategy make_strategy(const std::string& name, const StrategyConfig& config) {
    if (name == "planar-bfs")
        return [config](const GameState& s) { return planar_destroyer(s, config); };
    if (name == "apex-first")
        return [config](const GameState& s) -> DestroyerMove {
            for (int a : config.apexes)
                if (s.graph.has_vertex(a)) return DeleteVertexMove{a};
            return DeleteVertexMove{max_degree_vertex(s.graph)};
        };
    if (name == "delete-max-degree")
        return [](const GameState& s) -> DestroyerMove {
            return DeleteVertexMove{max_degree_vertex(s.graph)};
        };
    throw std::invalid_argument("unknown strategy '" + name + "'");
}

namespace {

struct PtasContext {
    int q;
    const RSequence& rs;
    const Strategy& strategy;
    int depth_budget;
    SolveLimits limits;
    bool parallel;
};

struct BranchResult {
    int value = 0;
    EdgeColouring colouring;
    bool certified = true;
    int max_moves = 0; // deepest chain of moves explored below the root
};

BranchResult solve_state(const PtasContext& ctx, const GameState& state, bool allow_parallel);

BranchResult solve_layering(const PtasContext& ctx, const GameState& state, const Layering& lam,
                            std::int64_t r, bool allow_parallel) {
    if (r > 1000000) throw std::invalid_argument("layering width too large to branch over");
    struct Candidate {
        int value = 0;
        EdgeColouring colouring;
        bool certified = true;
        int max_moves = 0;
    };

    auto evaluate_residue = [&](int m) {
        Candidate cand;
        Stratification strat = stratify(state.graph, lam, static_cast<int>(r), m);
        int offset = 0;
        for (const auto& part : strat.parts) {
            std::set<int> keep(part.begin(), part.end());
            GameState sub;
            sub.graph = strat.residual.induced(keep);
            for (int v : part)
                if (state.s_set.contains(v) || strat.boundary.contains(v)) sub.s_set.insert(v);
            sub.depth = state.depth + 1;
            sub.layering_played = true;
            BranchResult res = solve_state(ctx, sub, false);
            merge_shifted(cand.colouring, res.colouring, offset);
            offset += res.value;
            cand.value += res.value;
            cand.certified = cand.certified && res.certified;
            cand.max_moves = std::max(cand.max_moves, res.max_moves);
        }
        for (const Edge& e : strat.removed) cand.colouring.set(e, 0);
        return cand;
    };

    std::vector<Candidate> per_m(static_cast<size_t>(r));
    if (allow_parallel && r > 1) {
        std::vector<std::future<Candidate>> futures;
        futures.reserve(static_cast<size_t>(r));
        for (int m = 0; m < r; ++m)
            futures.push_back(std::async(std::launch::async, evaluate_residue, m));
        for (int m = 0; m < r; ++m) per_m[m] = futures[m].get();
    } else {
        for (int m = 0; m < r; ++m) per_m[m] = evaluate_residue(m);
    }

    // The certificate needs every residue; the colouring keeps the best one,
    // ties resolved towards the lowest residue.
    BranchResult out;
    int best_m = 0;
    for (int m = 0; m < r; ++m) {
        if (per_m[m].value > per_m[best_m].value) best_m = m;
        out.certified = out.certified && per_m[m].certified;
        out.max_moves = std::max(out.max_moves, per_m[m].max_moves + 1);
    }
    out.value = per_m[best_m].value;
    out.colouring = std::move(per_m[best_m].colouring);
    return out;
}

BranchResult solve_state(const PtasContext& ctx, const GameState& state, bool allow_parallel) {
    std::int64_t r_head = ctx.rs.at(state.depth);
    std::int64_t s_threshold = ceil_div(r_head, 3);

    Instance inst{state.graph, state.s_set, ctx.q};
    bool base_known = false;
    SolveResult base;
    try {
        base = bounded_solver(inst, s_threshold, ctx.limits);
        base_known = true;
    } catch (const TooLargeError&) {
        // The small-matching exact fallback exceeds the edge limit; continue
        // with the game and leave this branch uncertified.
    }
    if (base_known && base.optimal && base.value < s_threshold)
        return {base.value, std::move(base.witness), true, 0};

    int moves_taken = state.depth - 1;
    if (moves_taken >= ctx.depth_budget) {
        Matching m = greedy_maximal_matching(state.graph);
        return {m.size(), matching_colouring(state.graph, m), false, 0};
    }

    DestroyerMove move = ctx.strategy(state);

    if (const auto* del = std::get_if<DeleteVertexMove>(&move)) {
        if (!state.graph.has_vertex(del->v))
            throw std::invalid_argument("strategy deleted unknown vertex " +
                                        std::to_string(del->v));
        GameState sub;
        sub.graph = delete_vertex(state.graph, del->v);
        sub.s_set = next_s_after_delete(state.graph, state.s_set, del->v);
        sub.depth = state.depth + 1;
        sub.layering_played = state.layering_played;
        BranchResult res = solve_state(ctx, sub, allow_parallel);
        for (int w : state.graph.neighbours(del->v)) res.colouring.set(Edge(del->v, w), 0);
        res.certified = res.certified && base_known;
        res.max_moves += 1;
        return res;
    }

    const auto& lam = std::get<LayeringMove>(move).lam;
    if (!is_valid_layering(state.graph, lam))
        throw std::invalid_argument("strategy proposed an invalid layering");
    BranchResult res = solve_layering(ctx, state, lam, r_head, allow_parallel && ctx.parallel);
    res.certified = res.certified && base_known;
    return res;
}

} // namespace

PtasReport ptas_solve(const Instance& inst, const RSequence& rs, const Strategy& strategy,
                      int depth_budget, const SolveLimits& limits, bool parallel) {
    validate_instance(inst);
    if (inst.q < 2) throw std::invalid_argument("ptas_solve requires q >= 2");
    if (depth_budget < 1) throw std::invalid_argument("depth budget must be at least 1");

    PtasContext ctx{inst.q, rs, strategy, depth_budget, limits, parallel};
    GameState root{inst.graph, inst.s_set, 1, false, {}};
    BranchResult res = solve_state(ctx, root, parallel);

    PtasReport report;
    report.value = res.value;
    report.witness = std::move(res.colouring);
    report.rounds_used = res.max_moves;
    report.base_cases_optimal = res.certified;
    if (res.certified) {
        double product = guarantee_product(rs, res.max_moves, inst.q);
        if (product > 0.0) report.certified_ratio = product;
    }

    if (!is_composable(inst, report.witness))
        throw std::logic_error("ptas produced a non-composable colouring");
    if (spread_nonzero(report.witness) < report.value)
        throw std::logic_error("ptas witness does not reach the reported value");
    return report;
}

} // namespace meqc
