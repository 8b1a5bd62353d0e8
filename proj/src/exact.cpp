#include "meqc/exact.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "meqc/errors.hpp"

namespace meqc {

namespace {

// Branch-and-bound over edge partitions in restricted-growth order: colour
// classes are numbered by first occurrence along the edge list, so every
// partition is visited exactly once up to renaming.  In composable mode class
// 0 is the reserved glue colour, may be used at any time and never counts.
struct ClassSearch {
    std::vector<std::array<int, 2>> ends; // compact endpoint indices per edge
    std::vector<int> budget;              // palette budget per compact vertex
    std::vector<char> reserved;           // vertex must keep a slot free for colour 0
    bool zero_class = false;
    int class_cap = 0;

    std::vector<std::vector<int>> palette;
    std::vector<int> nonzero;
    std::vector<int> assign;
    std::vector<int> best_assign;
    int best = -1;

    void run() {
        palette.assign(budget.size(), {});
        nonzero.assign(budget.size(), 0);
        assign.assign(ends.size(), -1);
        best = -1;
        recurse(0, 0);
    }

    bool admits(int w, int c) const {
        const auto& pal = palette[w];
        bool present = std::find(pal.begin(), pal.end(), c) != pal.end();
        if (!present && static_cast<int>(pal.size()) + 1 > budget[w]) return false;
        if (c != 0 && reserved[w] && !present && nonzero[w] + 1 > budget[w] - 1) return false;
        return true;
    }

    void recurse(size_t i, int classes) {
        if (i == ends.size()) {
            if (classes > best) {
                best = classes;
                best_assign = assign;
            }
            return;
        }
        int remaining = static_cast<int>(ends.size() - i);
        if (std::min(classes + remaining, class_cap) <= best) return;

        auto [a, b] = ends[i];
        auto try_colour = [&](int c) {
            if (!admits(a, c) || !admits(b, c)) return;
            bool added_a = push_colour(a, c);
            bool added_b = push_colour(b, c);
            assign[i] = c;
            recurse(i + 1, std::max(classes, counted_class_bound(c, classes)));
            assign[i] = -1;
            if (added_b) pop_colour(b, c);
            if (added_a) pop_colour(a, c);
        };

        if (zero_class) {
            if (classes < class_cap) try_colour(classes + 1);
            for (int c = 1; c <= classes; ++c) try_colour(c);
            try_colour(0);
        } else {
            if (classes < class_cap) try_colour(classes);
            for (int c = 0; c < classes; ++c) try_colour(c);
        }
    }

    int counted_class_bound(int c, int classes) const {
        if (zero_class) return c > classes ? c : classes;
        return c >= classes ? c + 1 : classes;
    }

    bool push_colour(int w, int c) {
        auto& pal = palette[w];
        if (std::find(pal.begin(), pal.end(), c) != pal.end()) return false;
        pal.push_back(c);
        if (c != 0) ++nonzero[w];
        return true;
    }

    void pop_colour(int w, int c) {
        palette[w].pop_back();
        if (c != 0) --nonzero[w];
    }
};

struct ComponentSolution {
    int value = 0;
    std::vector<int> classes; // counted class per edge; -1 marks the zero class
};

// Solves one connected component.  `counted_cap` limits how many counted
// classes the search may open.
ComponentSolution solve_component(const Graph& comp, const std::set<int>& reserved_set,
                                  const std::map<int, int>& budgets, bool zero_class,
                                  int counted_cap) {
    std::map<int, int> index;
    for (int v : comp.vertices()) index.emplace(v, static_cast<int>(index.size()));

    ClassSearch search;
    search.zero_class = zero_class;
    search.class_cap = std::min(counted_cap, comp.edge_count());
    search.budget.resize(index.size());
    search.reserved.assign(index.size(), 0);
    for (const auto& [v, i] : index) {
        search.budget[i] = budgets.at(v);
        if (reserved_set.contains(v)) search.reserved[i] = 1;
    }
    for (const Edge& e : comp.edges())
        search.ends.push_back({index.at(e.u), index.at(e.v)});

    search.run();

    ComponentSolution sol;
    sol.value = std::max(search.best, 0);
    sol.classes.reserve(search.best_assign.size());
    for (int c : search.best_assign)
        sol.classes.push_back(zero_class ? c - 1 : c); // counted classes become 0-based
    return sol;
}

void check_size(int edge_count, const SolveLimits& limits) {
    if (edge_count > limits.max_edges_exhaustive)
        throw TooLargeError("instance has " + std::to_string(edge_count) +
                            " edges, exhaustive limit is " +
                            std::to_string(limits.max_edges_exhaustive));
}

} // namespace

SolveResult exact_composable_spread(const Instance& inst, const SolveLimits& limits) {
    validate_instance(inst);
    if (inst.q < 2) throw std::invalid_argument("exact_composable_spread requires q >= 2");
    check_size(inst.graph.edge_count(), limits);

    std::map<int, int> budgets;
    for (int v : inst.graph.vertices()) budgets[v] = inst.q;

    SolveResult res;
    res.optimal = true;
    int offset = 0;
    for (const auto& comp_verts : connected_components(inst.graph)) {
        std::set<int> keep(comp_verts.begin(), comp_verts.end());
        Graph comp = inst.graph.induced(keep);

        int cap = 2 * inst.q * greedy_maximal_matching(comp).size();
        if (limits.max_classes) {
            int remaining = *limits.max_classes - res.value;
            cap = std::min(cap, std::max(remaining, 0));
        }
        ComponentSolution sol = solve_component(comp, inst.s_set, budgets, true, cap);

        const auto& edges = comp.edges();
        for (size_t i = 0; i < edges.size(); ++i) {
            int cls = sol.classes[i];
            res.witness.set(edges[i], cls < 0 ? 0 : offset + cls + 1);
        }
        res.value += sol.value;
        offset += sol.value;
    }
    // With a binding class cap the true optimum may lie above the result.
    if (limits.max_classes && res.value >= *limits.max_classes) res.optimal = false;
    return res;
}

SolveResult exact_q1(const Instance& inst) {
    validate_instance(inst);
    if (inst.q != 1) throw std::invalid_argument("exact_q1 requires q = 1");

    SolveResult res;
    res.optimal = true;
    int next = 1;
    for (const auto& comp_verts : connected_components(inst.graph)) {
        bool touches_s = std::any_of(comp_verts.begin(), comp_verts.end(),
                                     [&](int v) { return inst.s_set.contains(v); });
        std::set<int> keep(comp_verts.begin(), comp_verts.end());
        Graph comp = inst.graph.induced(keep);
        if (comp.edge_count() == 0) continue;
        int colour = touches_s ? 0 : next++;
        for (const Edge& e : comp.edges()) res.witness.set(e, colour);
    }
    res.value = next - 1;
    return res;
}

SolveResult solve_exact(const Instance& inst, const SolveLimits& limits) {
    validate_instance(inst);
    return inst.q == 1 ? exact_q1(inst) : exact_composable_spread(inst, limits);
}

SolveResult bounded_solver(const Instance& inst, long long s, const SolveLimits& limits) {
    validate_instance(inst);
    if (inst.q < 2) throw std::invalid_argument("bounded_solver requires q >= 2");
    if (s < 1) throw std::invalid_argument("bounded_solver requires s >= 1");

    Matching m = greedy_maximal_matching(inst.graph);
    if (m.size() >= s) {
        SolveResult res;
        res.value = m.size();
        res.witness = matching_colouring(inst.graph, m);
        res.optimal = false;
        return res;
    }
    return exact_composable_spread(inst, limits);
}

BoundsResult bounds(const Instance& inst) {
    validate_instance(inst);
    if (inst.q < 2) throw std::invalid_argument("bounds requires q >= 2");
    BoundsResult b;
    b.matching = greedy_maximal_matching(inst.graph);
    b.lower = b.matching.size();
    b.upper = 2 * inst.q * b.matching.size();
    return b;
}

GSpreadResult exact_g_spread(const Graph& g, const std::map<int, int>& budgets,
                             const SolveLimits& limits) {
    long long budget_sum = 0;
    for (int v : g.vertices()) {
        auto it = budgets.find(v);
        if (it == budgets.end())
            throw std::invalid_argument("no budget for vertex " + std::to_string(v));
        if (it->second < 1) throw std::invalid_argument("budgets must be positive");
        budget_sum += it->second;
    }
    check_size(g.edge_count(), limits);

    GSpreadResult res;
    int offset = 0;
    for (const auto& comp_verts : connected_components(g)) {
        std::set<int> keep(comp_verts.begin(), comp_verts.end());
        Graph comp = g.induced(keep);

        long long comp_budget = 0;
        for (int v : comp_verts) comp_budget += budgets.at(v);
        int cap = static_cast<int>(std::min<long long>(comp.edge_count(), comp_budget / 2));
        ComponentSolution sol = solve_component(comp, {}, budgets, false, cap);

        const auto& edges = comp.edges();
        for (size_t i = 0; i < edges.size(); ++i) res.witness.set(edges[i], offset + sol.classes[i]);
        res.value += sol.value;
        offset += sol.value;
    }
    return res;
}

} // namespace meqc
