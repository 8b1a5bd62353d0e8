#include "meqc/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <utility>

namespace meqc {

namespace {

int floor_div(int a, int b) {
    int q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) --q;
    return q;
}

} // namespace

Edge::Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b) throw std::invalid_argument("loop edge at vertex " + std::to_string(a));
}

Graph Graph::with_vertices(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    return g;
}

void Graph::add_vertex(int v) {
    if (v < 0) throw std::invalid_argument("negative vertex id");
    if (vert_set_.contains(v)) throw std::invalid_argument("duplicate vertex " + std::to_string(v));
    vert_set_.insert(v);
    verts_.push_back(v);
    adj_[v];
}

void Graph::add_edge(int u, int v) {
    Edge e(u, v);
    if (!has_vertex(u) || !has_vertex(v))
        throw std::invalid_argument("edge endpoint outside vertex set");
    if (edge_set_.contains(e))
        throw std::invalid_argument("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    edge_set_.insert(e);
    edges_.push_back(e);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
}

bool Graph::has_vertex(int v) const { return vert_set_.contains(v); }

bool Graph::has_edge(int u, int v) const { return edge_set_.contains(Edge(u, v)); }

int Graph::degree(int v) const { return static_cast<int>(neighbours(v).size()); }

const std::vector<int>& Graph::neighbours(int v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw std::invalid_argument("unknown vertex " + std::to_string(v));
    return it->second;
}

Graph Graph::induced(const std::set<int>& keep) const {
    Graph sub;
    for (int v : verts_)
        if (keep.contains(v)) sub.add_vertex(v);
    for (const Edge& e : edges_)
        if (keep.contains(e.u) && keep.contains(e.v)) sub.add_edge(e.u, e.v);
    return sub;
}

Layering bfs_layering(const Graph& g) {
    Layering lam;
    std::vector<int> order(g.vertices());
    std::sort(order.begin(), order.end());

    int next_isolated_level = 0;
    for (int v : order)
        if (g.degree(v) == 0) lam.level[v] = next_isolated_level++;

    for (int root : order) {
        if (g.degree(root) == 0 || lam.level.contains(root)) continue;
        std::deque<int> queue{root};
        lam.level[root] = 0;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int y : g.neighbours(x)) {
                if (lam.level.contains(y)) continue;
                lam.level[y] = lam.level[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return lam;
}

bool is_valid_layering(const Graph& g, const Layering& lam) {
    for (int v : g.vertices())
        if (!lam.level.contains(v)) return false;
    for (const Edge& e : g.edges()) {
        int d = lam.level.at(e.u) - lam.level.at(e.v);
        if (d < -1 || d > 1) return false;
    }
    return true;
}

Matching greedy_maximal_matching(const Graph& g) {
    Matching m;
    std::set<int> used;
    for (const Edge& e : g.edges()) {
        if (used.contains(e.u) || used.contains(e.v)) continue;
        m.edges.push_back(e);
        used.insert(e.u);
        used.insert(e.v);
    }
    return m;
}

bool is_matching_of(const Graph& g, const Matching& m) {
    std::set<int> used;
    for (const Edge& e : m.edges) {
        if (!g.has_edge(e.u, e.v)) return false;
        if (used.contains(e.u) || used.contains(e.v)) return false;
        used.insert(e.u);
        used.insert(e.v);
    }
    return true;
}

Stratification stratify(const Graph& g, const Layering& lam, int r, int m) {
    if (r < 2) throw std::invalid_argument("stratification requires r >= 2");
    if (m < 0 || m >= r) throw std::invalid_argument("residue m outside [0, r)");
    if (!is_valid_layering(g, lam)) throw std::invalid_argument("layering does not fit graph");

    Stratification out;
    auto crosses = [&](const Edge& e) {
        int lu = lam.level.at(e.u) % r;
        int lv = lam.level.at(e.v) % r;
        int succ = (m + 1) % r;
        return (lu == m && lv == succ) || (lv == m && lu == succ);
    };

    for (int v : g.vertices()) out.residual.add_vertex(v);
    for (const Edge& e : g.edges()) {
        if (crosses(e)) {
            out.removed.push_back(e);
            out.boundary.insert(e.u);
            out.boundary.insert(e.v);
        } else {
            out.residual.add_edge(e.u, e.v);
        }
    }

    // Bands of r consecutive levels starting just above each removed residue.
    std::map<int, std::vector<int>> bands;
    for (int v : g.vertices()) bands[floor_div(lam.level.at(v) - m - 1, r)].push_back(v);
    for (auto& [window, members] : bands) out.parts.push_back(std::move(members));
    return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<int> order(g.vertices());
    std::sort(order.begin(), order.end());
    std::set<int> seen;
    for (int root : order) {
        if (seen.contains(root)) continue;
        std::vector<int> comp;
        std::deque<int> queue{root};
        seen.insert(root);
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            comp.push_back(x);
            for (int y : g.neighbours(x)) {
                if (seen.contains(y)) continue;
                seen.insert(y);
                queue.push_back(y);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Graph delete_vertex(const Graph& g, int v) {
    if (!g.has_vertex(v)) throw std::invalid_argument("unknown vertex " + std::to_string(v));
    Graph out;
    for (int x : g.vertices())
        if (x != v) out.add_vertex(x);
    for (const Edge& e : g.edges())
        if (e.u != v && e.v != v) out.add_edge(e.u, e.v);
    return out;
}

} // namespace meqc
