#include "meqc/colouring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "meqc/errors.hpp"

namespace meqc {

int EdgeColouring::at(const Edge& e) const {
    auto it = colour.find(e);
    if (it == colour.end())
        throw std::invalid_argument("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                                    " not coloured");
    return it->second;
}

void EdgeColouring::set(const Edge& e, int c) {
    if (c < 0) throw std::invalid_argument("negative colour");
    colour[e] = c;
}

bool EdgeColouring::covers(const Graph& g) const {
    if (colour.size() != static_cast<size_t>(g.edge_count())) return false;
    for (const Edge& e : g.edges())
        if (!colour.contains(e)) return false;
    return true;
}

void validate_instance(const Instance& inst) {
    if (inst.q < 1) throw std::invalid_argument("q must be at least 1");
    for (int v : inst.s_set)
        if (!inst.graph.has_vertex(v))
            throw std::invalid_argument("s-set vertex " + std::to_string(v) + " not in graph");
}

std::set<int> incident_palette(const Graph& g, const EdgeColouring& f, int v) {
    std::set<int> palette;
    for (int w : g.neighbours(v)) palette.insert(f.at(Edge(v, w)));
    return palette;
}

bool is_valid_q_colouring(const Instance& inst, const EdgeColouring& f) {
    if (!f.covers(inst.graph)) throw std::invalid_argument("colouring does not cover edge set");
    for (int v : inst.graph.vertices())
        if (static_cast<int>(incident_palette(inst.graph, f, v).size()) > inst.q) return false;
    return true;
}

bool is_composable(const Instance& inst, const EdgeColouring& f) {
    if (!is_valid_q_colouring(inst, f)) return false;
    for (int v : inst.s_set) {
        std::set<int> palette = incident_palette(inst.graph, f, v);
        palette.erase(0);
        if (static_cast<int>(palette.size()) > inst.q - 1) return false;
    }
    return true;
}

int spread_nonzero(const EdgeColouring& f) {
    std::set<int> seen;
    for (const auto& [e, c] : f.colour)
        if (c != 0) seen.insert(c);
    return static_cast<int>(seen.size());
}

int spread_total(const EdgeColouring& f) {
    std::set<int> seen;
    for (const auto& [e, c] : f.colour) seen.insert(c);
    return static_cast<int>(seen.size());
}

EdgeColouring matching_colouring(const Graph& g, const Matching& m) {
    if (!is_matching_of(g, m)) throw std::invalid_argument("not a matching of the graph");
    EdgeColouring f;
    for (const Edge& e : g.edges()) f.set(e, 0);
    int next = 1;
    for (const Edge& e : m.edges) f.set(e, next++);
    return f;
}

bool is_valid_g_colouring(const Graph& g, const std::map<int, int>& budgets,
                          const EdgeColouring& f) {
    if (!f.covers(g)) throw std::invalid_argument("colouring does not cover edge set");
    for (int v : g.vertices()) {
        auto it = budgets.find(v);
        if (it == budgets.end())
            throw std::invalid_argument("no budget for vertex " + std::to_string(v));
        if (static_cast<int>(incident_palette(g, f, v).size()) > it->second) return false;
    }
    return true;
}

EdgeColouring relabel_zero_free(const EdgeColouring& f) {
    bool uses_zero = false;
    int max_colour = 0;
    for (const auto& [e, c] : f.colour) {
        uses_zero = uses_zero || c == 0;
        max_colour = std::max(max_colour, c);
    }
    if (!uses_zero) return f;
    EdgeColouring out;
    for (const auto& [e, c] : f.colour) out.set(e, c == 0 ? max_colour + 1 : c);
    return out;
}

EdgeColouring parse_colouring_text(const std::string& text, const Graph& host) {
    EdgeColouring f;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first == "c") continue;
        int u = 0, v = 0, c = 0;
        std::istringstream retry(line);
        if (!(retry >> u >> v >> c) || c < 0)
            throw ParseError("bad colouring line " + std::to_string(line_no) + ": " + line);
        std::string extra;
        if (retry >> extra)
            throw ParseError("trailing tokens on colouring line " + std::to_string(line_no));
        if (!host.has_edge(u, v))
            throw ParseError("colouring line " + std::to_string(line_no) + " names non-edge " +
                             std::to_string(u) + " " + std::to_string(v));
        Edge e(u, v);
        if (f.colour.contains(e))
            throw ParseError("edge " + std::to_string(u) + " " + std::to_string(v) +
                             " coloured twice");
        f.set(e, c);
    }
    if (!f.covers(host)) throw ParseError("colouring does not cover every edge of the graph");
    return f;
}

std::string write_colouring_text(const EdgeColouring& f) {
    std::ostringstream out;
    for (const auto& [e, c] : f.colour)
        out << e.u << ' ' << e.v << ' ' << c << '\n';
    return out.str();
}

} // namespace meqc
