#include "meqc/generators.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace meqc {

namespace {

// mt19937 output is pinned by the standard; deriving choices from raw draws
// keeps generated instances identical across library implementations.
size_t draw_index(std::mt19937& rng, size_t n) { return rng() % n; }

} // namespace

Graph grid_graph(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid needs positive dimensions");
    Graph g = Graph::with_vertices(rows * cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            int v = i * cols + j;
            if (j + 1 < cols) g.add_edge(v, v + 1);
            if (i + 1 < rows) g.add_edge(v, v + cols);
        }
    return g;
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least one vertex");
    Graph g = Graph::with_vertices(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph star_graph(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
    Graph g = Graph::with_vertices(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs at least one vertex");
    Graph g = Graph::with_vertices(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph random_planar_subgraph(int rows, int cols, int drop, unsigned seed) {
    Graph grid = grid_graph(rows, cols);
    if (drop < 0 || drop > grid.edge_count())
        throw std::invalid_argument("cannot drop " + std::to_string(drop) + " of " +
                                    std::to_string(grid.edge_count()) + " edges");

    std::mt19937 rng(seed);
    std::vector<int> order(grid.edge_count());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    for (size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[draw_index(rng, i)]);

    std::set<int> dropped(order.begin(), order.begin() + drop);
    Graph g = Graph::with_vertices(rows * cols);
    for (int i = 0; i < grid.edge_count(); ++i)
        if (!dropped.contains(i)) g.add_edge(grid.edges()[i].u, grid.edges()[i].v);
    return g;
}

ApexInstance apex_over_grid(int rows, int cols, int apex_count, unsigned seed) {
    if (apex_count < 1) throw std::invalid_argument("need at least one apex");
    ApexInstance out;
    out.graph = grid_graph(rows, cols);
    int grid_n = rows * cols;

    std::mt19937 rng(seed);
    for (int a = 0; a < apex_count; ++a) {
        int apex = grid_n + a;
        out.graph.add_vertex(apex);
        out.apexes.push_back(apex);
        bool any = false;
        for (int v = 0; v < grid_n; ++v)
            if (rng() & 1u) {
                out.graph.add_edge(apex, v);
                any = true;
            }
        if (!any) out.graph.add_edge(apex, 0);
    }
    return out;
}

} // namespace meqc
