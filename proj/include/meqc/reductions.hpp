#pragma once

#include <map>
#include <string>
#include <vector>

#include "meqc/colouring.hpp"
#include "meqc/graph.hpp"

namespace meqc {

// CNF formula with DIMACS-style signed literals (variable j appears as +j or
// -j, 1-indexed).  The reduction accepts formulas whose clauses hold one to
// three literals over distinct variables and whose variables occur in at most
// three clauses.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
};

void validate_formula(const CnfFormula& phi);

CnfFormula parse_cnf(const std::string& text);

enum class VertexRole { Apex, Clause, VarCopy, Conflict };

struct RoleInfo {
    VertexRole role;
    int clause = 0; // 1-based clause index (Clause)
    int var = 0;    // variable (VarCopy, Conflict)
    int occ_a = 0;  // occurrence index (VarCopy, Conflict)
    int occ_b = 0;  // second occurrence index (Conflict)
};

// Budget-constrained colouring instance equivalent to satisfiability of the
// formula: the formula is satisfiable iff the instance admits a colouring
// with at least `threshold` = m+1 distinct colours.  Vertex 0 is an apex
// adjacent to every clause and conflict vertex.
struct ReductionArtifact {
    Graph graph;
    std::map<int, int> budgets;
    int threshold = 0;
    std::map<int, RoleInfo> roles;
};

ReductionArtifact reduce_sat(const CnfFormula& phi);

// Attaches q - budget(v) pendant vertices to every v, turning the budget
// instance into a plain uniform-budget-q instance whose optimum shifts by
// exactly (#vertices with budget 1) + (q-2) * #vertices.
struct PendantResult {
    Graph graph;
    int threshold = 0;
};

PendantResult pendant_transform(const Graph& g, const std::map<int, int>& budgets, int q, int t);

struct SatResult {
    bool satisfiable = false;
    std::vector<bool> assignment; // assignment[j-1] is the value of variable j
};

// Exhaustive check, first satisfying assignment in counting order.  Requires
// at most 24 variables.
SatResult brute_sat(const CnfFormula& phi);

// Witness colouring with spread m+1 built from a satisfying assignment: each
// clause sends its colour through one true literal's copy vertex; everything
// else gets colour 0.  Throws when the assignment leaves a clause false.
EdgeColouring assignment_to_colouring(const CnfFormula& phi, const ReductionArtifact& artifact,
                                      const std::vector<bool>& assignment);

} // namespace meqc
