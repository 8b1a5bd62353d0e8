#pragma once

#include <compare>
#include <map>
#include <set>
#include <vector>

namespace meqc {

// Undirected edge; endpoints are normalised so that u < v.
struct Edge {
    int u;
    int v;

    Edge(int a, int b);
    auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph over non-negative integer vertex ids.  Vertices and
// edges iterate in insertion order; every algorithm in this library relies on
// that for reproducible output.  Mutation is confined to the build phase --
// the algorithmic operations below treat graphs as values and return copies.
class Graph {
public:
    Graph() = default;

    // Graph with vertices 0..n-1 and no edges.
    static Graph with_vertices(int n);

    void add_vertex(int v);
    void add_edge(int u, int v);

    bool has_vertex(int v) const;
    bool has_edge(int u, int v) const;
    int vertex_count() const { return static_cast<int>(verts_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int degree(int v) const;

    const std::vector<int>& vertices() const { return verts_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbours(int v) const;

    // Subgraph induced on `keep`; vertex and edge order is preserved.
    Graph induced(const std::set<int>& keep) const;

private:
    std::vector<int> verts_;
    std::vector<Edge> edges_;
    std::set<int> vert_set_;
    std::set<Edge> edge_set_;
    std::map<int, std::vector<int>> adj_;
};

// Assignment of a level to every vertex such that adjacent vertices differ by
// at most one level.
struct Layering {
    std::map<int, int> level;
};

struct Matching {
    std::vector<Edge> edges;

    int size() const { return static_cast<int>(edges.size()); }
};

// Result of removing one residue class of level-crossing edges: the residual
// graph keeps all vertices, `removed` holds the deleted edges, `boundary`
// their endpoints, and `parts` groups the vertices into bands of at most r
// consecutive levels such that no residual edge crosses bands.
struct Stratification {
    Graph residual;
    std::set<int> boundary;
    std::vector<Edge> removed;
    std::vector<std::vector<int>> parts;
};

// BFS levels per component, rooted at the component's lowest vertex id.
// Isolated vertices receive distinct consecutive levels 0,1,2,... in id order
// so that level-based moves can still make progress on edgeless graphs.
Layering bfs_layering(const Graph& g);

bool is_valid_layering(const Graph& g, const Layering& lam);

// Scans edges in insertion order and keeps every edge whose endpoints are
// both unmatched.  The result is a maximal matching.
Matching greedy_maximal_matching(const Graph& g);

bool is_matching_of(const Graph& g, const Matching& m);

// Deletes every edge xy with level(x) = m and level(y) = m+1 (mod r).
// Requires r >= 2 and 0 <= m < r.
Stratification stratify(const Graph& g, const Layering& lam, int r, int m);

// Components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Copy of g without v and its incident edges; other ids are unchanged.
Graph delete_vertex(const Graph& g, int v);

} // namespace meqc
