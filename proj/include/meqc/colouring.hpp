#pragma once

#include <map>
#include <set>
#include <string>

#include "meqc/graph.hpp"

namespace meqc {

// Edge colouring with plain non-negative integer colours.  Colour 0 is the
// reserved "glue" colour: it never counts towards the objective and is the
// only colour allowed to spill across boundary vertices when colourings of
// subgraphs are combined.
struct EdgeColouring {
    std::map<Edge, int> colour;

    int at(const Edge& e) const;
    void set(const Edge& e, int c);
    bool covers(const Graph& g) const;
};

// A colouring problem: find an edge colouring of `graph` in which every
// vertex sees at most q distinct colours and every vertex of `s_set` sees at
// most q-1 distinct non-zero colours, maximising the number of distinct
// non-zero colours.
struct Instance {
    Graph graph;
    std::set<int> s_set;
    int q = 2;
};

void validate_instance(const Instance& inst);

// Distinct colours on edges incident to v (0 included when present).
std::set<int> incident_palette(const Graph& g, const EdgeColouring& f, int v);

// Every vertex sees at most q distinct colours.
bool is_valid_q_colouring(const Instance& inst, const EdgeColouring& f);

// Valid, and every vertex of s_set sees at most q-1 distinct non-zero colours.
bool is_composable(const Instance& inst, const EdgeColouring& f);

int spread_nonzero(const EdgeColouring& f);
int spread_total(const EdgeColouring& f);

// Colour i on the i-th matching edge (1-based), colour 0 elsewhere.  For any
// q >= 2 the result is composable for every choice of s_set.
EdgeColouring matching_colouring(const Graph& g, const Matching& m);

// Every vertex v sees at most budgets(v) distinct colours; here colour 0 has
// no special role.  Budgets must be defined on all vertices.
bool is_valid_g_colouring(const Graph& g, const std::map<int, int>& budgets,
                          const EdgeColouring& f);

// Renames colour 0, when used, to one more than the largest colour.  Used to
// present final answers of plain instances, where no colour is reserved.
EdgeColouring relabel_zero_free(const EdgeColouring& f);

// Interchange format: one line "<u> <v> <colour>" per edge.
EdgeColouring parse_colouring_text(const std::string& text, const Graph& host);
std::string write_colouring_text(const EdgeColouring& f);

} // namespace meqc
