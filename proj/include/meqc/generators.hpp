#pragma once

#include <vector>

#include "meqc/graph.hpp"

namespace meqc {

// Deterministic instance families.  Randomised families draw from a fixed
// generator so that equal seeds reproduce equal graphs byte for byte.

Graph grid_graph(int rows, int cols);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph complete_graph(int n);

// Grid minus `drop` seeded random edges; all vertices are kept.
Graph random_planar_subgraph(int rows, int cols, int drop, unsigned seed);

struct ApexInstance {
    Graph graph;
    std::vector<int> apexes;
};

// Grid plus `apex_count` extra vertices, each joined to a seeded random
// subset of the grid vertices.
ApexInstance apex_over_grid(int rows, int cols, int apex_count, unsigned seed);

} // namespace meqc
