#include "meqc/reductions.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "meqc/errors.hpp"

namespace meqc {

namespace {

struct Occurrence {
    int clause;    // 1-based
    bool positive;
};

// Occurrences of each variable in clause order; index 0 unused.
std::vector<std::vector<Occurrence>> occurrence_table(const CnfFormula& phi) {
    std::vector<std::vector<Occurrence>> occ(phi.num_vars + 1);
    for (size_t i = 0; i < phi.clauses.size(); ++i)
        for (int lit : phi.clauses[i])
            occ[std::abs(lit)].push_back({static_cast<int>(i) + 1, lit > 0});
    return occ;
}

} // namespace

void validate_formula(const CnfFormula& phi) {
    if (phi.num_vars < 0) throw ParseError("negative variable count");
    std::vector<int> occurrences(phi.num_vars + 1, 0);
    for (size_t i = 0; i < phi.clauses.size(); ++i) {
        const auto& clause = phi.clauses[i];
        if (clause.empty() || clause.size() > 3)
            throw ParseError("clause " + std::to_string(i + 1) + " must hold 1 to 3 literals");
        std::vector<int> vars;
        for (int lit : clause) {
            int var = std::abs(lit);
            if (var < 1 || var > phi.num_vars)
                throw ParseError("literal " + std::to_string(lit) + " in clause " +
                                 std::to_string(i + 1) + " names an unknown variable");
            vars.push_back(var);
        }
        std::sort(vars.begin(), vars.end());
        if (std::adjacent_find(vars.begin(), vars.end()) != vars.end())
            throw ParseError("clause " + std::to_string(i + 1) + " repeats a variable");
        for (int var : vars)
            if (++occurrences[var] > 3)
                throw ParseError("variable " + std::to_string(var) +
                                 " occurs in more than 3 clauses");
    }
}

CnfFormula parse_cnf(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> tokens;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "c") continue;
        tokens.push_back(first);
        std::string t;
        while (ls >> t) tokens.push_back(t);
    }
    if (tokens.size() < 4 || tokens[0] != "p" || tokens[1] != "cnf")
        throw ParseError("missing 'p cnf <vars> <clauses>' header");

    auto to_int = [](const std::string& tok) {
        size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw ParseError("expected integer, got '" + tok + "'");
        }
        if (pos != tok.size()) throw ParseError("expected integer, got '" + tok + "'");
        return value;
    };

    CnfFormula phi;
    phi.num_vars = to_int(tokens[2]);
    int num_clauses = to_int(tokens[3]);
    if (phi.num_vars < 0 || num_clauses < 0) throw ParseError("negative counts in header");

    std::vector<int> current;
    for (size_t i = 4; i < tokens.size(); ++i) {
        int lit = to_int(tokens[i]);
        if (lit == 0) {
            phi.clauses.push_back(current);
            current.clear();
        } else {
            current.push_back(lit);
        }
    }
    if (!current.empty()) throw ParseError("last clause is not terminated by 0");
    if (static_cast<int>(phi.clauses.size()) != num_clauses)
        throw ParseError("header declares " + std::to_string(num_clauses) + " clauses, found " +
                         std::to_string(phi.clauses.size()));
    validate_formula(phi);
    return phi;
}

ReductionArtifact reduce_sat(const CnfFormula& phi) {
    validate_formula(phi);
    int m = static_cast<int>(phi.clauses.size());
    if (m == 0) throw std::invalid_argument("reduction needs at least one clause");

    auto occ = occurrence_table(phi);

    ReductionArtifact art;
    art.threshold = m + 1;

    const int apex = 0;
    art.graph.add_vertex(apex);
    art.roles[apex] = {VertexRole::Apex, 0, 0, 0, 0};
    art.budgets[apex] = 1;

    for (int i = 1; i <= m; ++i) {
        art.graph.add_vertex(i);
        art.roles[i] = {VertexRole::Clause, i, 0, 0, 0};
        art.budgets[i] = 2;
    }

    int next = m + 1;
    std::map<std::pair<int, int>, int> copy_id;       // (var, occurrence) -> vertex
    std::map<std::tuple<int, int, int>, int> conflict_id;
    for (int j = 1; j <= phi.num_vars; ++j) {
        int k = static_cast<int>(occ[j].size());
        for (int a = 1; a <= k; ++a) {
            copy_id[{j, a}] = next;
            art.graph.add_vertex(next);
            art.roles[next] = {VertexRole::VarCopy, 0, j, a, 0};
            art.budgets[next] = 1;
            ++next;
        }
        // With the full three occurrences every pair gets a conflict vertex,
        // even a same-sign pair (left joined to the apex only); with fewer
        // occurrences only opposite-sign pairs need one.
        for (int a = 1; a <= k; ++a)
            for (int b = a + 1; b <= k; ++b) {
                bool opposite = occ[j][a - 1].positive != occ[j][b - 1].positive;
                if (k < 3 && !opposite) continue;
                conflict_id[{j, a, b}] = next;
                art.graph.add_vertex(next);
                art.roles[next] = {VertexRole::Conflict, 0, j, a, b};
                art.budgets[next] = 2;
                ++next;
            }
    }

    for (int i = 1; i <= m; ++i) art.graph.add_edge(apex, i);
    for (const auto& [key, n] : conflict_id) art.graph.add_edge(apex, n);
    for (const auto& [key, x] : copy_id) art.graph.add_edge(occ[key.first][key.second - 1].clause, x);
    for (const auto& [key, n] : conflict_id) {
        auto [j, a, b] = key;
        if (occ[j][a - 1].positive != occ[j][b - 1].positive) {
            art.graph.add_edge(n, copy_id.at({j, a}));
            art.graph.add_edge(n, copy_id.at({j, b}));
        }
    }
    return art;
}

PendantResult pendant_transform(const Graph& g, const std::map<int, int>& budgets, int q, int t) {
    if (q < 2) throw std::invalid_argument("pendant transform requires q >= 2");
    PendantResult out;
    out.graph = g;

    int next = 0;
    for (int v : g.vertices()) next = std::max(next, v + 1);

    int budget_one_count = 0;
    for (int v : g.vertices()) {
        auto it = budgets.find(v);
        if (it == budgets.end())
            throw std::invalid_argument("no budget for vertex " + std::to_string(v));
        if (it->second < 1 || it->second > q)
            throw std::invalid_argument("budget at vertex " + std::to_string(v) +
                                        " outside 1..q");
        if (it->second == 1) ++budget_one_count;
        for (int i = 0; i < q - it->second; ++i) {
            out.graph.add_vertex(next);
            out.graph.add_edge(v, next);
            ++next;
        }
    }
    out.threshold = t + budget_one_count + (q - 2) * g.vertex_count();
    return out;
}

SatResult brute_sat(const CnfFormula& phi) {
    if (phi.num_vars > 24) throw TooLargeError("brute-force SAT limited to 24 variables");
    SatResult res;
    res.assignment.assign(phi.num_vars, false);
    for (std::uint32_t mask = 0; mask < (1u << phi.num_vars); ++mask) {
        bool all = true;
        for (const auto& clause : phi.clauses) {
            bool sat = false;
            for (int lit : clause) {
                bool value = (mask >> (std::abs(lit) - 1)) & 1u;
                if (lit > 0 ? value : !value) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                all = false;
                break;
            }
        }
        if (all) {
            res.satisfiable = true;
            for (int j = 0; j < phi.num_vars; ++j) res.assignment[j] = (mask >> j) & 1u;
            return res;
        }
    }
    return res;
}

EdgeColouring assignment_to_colouring(const CnfFormula& phi, const ReductionArtifact& artifact,
                                      const std::vector<bool>& assignment) {
    validate_formula(phi);
    if (assignment.size() != static_cast<size_t>(phi.num_vars))
        throw std::invalid_argument("assignment length does not match variable count");

    auto occ = occurrence_table(phi);
    std::map<std::pair<int, int>, int> copy_id;
    for (const auto& [v, role] : artifact.roles)
        if (role.role == VertexRole::VarCopy) copy_id[{role.var, role.occ_a}] = v;

    EdgeColouring f;
    for (const Edge& e : artifact.graph.edges()) f.set(e, 0);

    int m = static_cast<int>(phi.clauses.size());
    for (int i = 1; i <= m; ++i) {
        int chosen = -1;
        for (int lit : phi.clauses[i - 1]) {
            int j = std::abs(lit);
            bool value = assignment[j - 1];
            if (lit > 0 ? !value : value) continue;
            int a = 0;
            for (size_t idx = 0; idx < occ[j].size(); ++idx)
                if (occ[j][idx].clause == i) a = static_cast<int>(idx) + 1;
            int candidate = copy_id.at({j, a});
            if (chosen < 0 || candidate < chosen) chosen = candidate;
        }
        if (chosen < 0)
            throw std::invalid_argument("assignment leaves clause vertex " + std::to_string(i) +
                                        " unsatisfied");
        for (int w : artifact.graph.neighbours(chosen)) f.set(Edge(chosen, w), i);
    }
    return f;
}

} // namespace meqc
