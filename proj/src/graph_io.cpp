#include "meqc/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "meqc/errors.hpp"

namespace meqc {

namespace {

int parse_int(const std::string& token, int line_no) {
    size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(token, &pos);
    } catch (const std::exception&) {
        throw ParseError("expected integer, got '" + token + "' on line " + std::to_string(line_no));
    }
    if (pos != token.size())
        throw ParseError("expected integer, got '" + token + "' on line " + std::to_string(line_no));
    return value;
}

} // namespace

InstanceData parse_instance_text(const std::string& text) {
    InstanceData data;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool saw_header = false;
    int declared_n = 0, declared_m = 0, edges_seen = 0;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.empty()) continue;

        if (tok[0] == "c") {
            if (tok.size() >= 3 && tok[1] == "apex")
                for (size_t i = 2; i < tok.size(); ++i)
                    data.apex_hints.push_back(parse_int(tok[i], line_no));
            if (tok.size() == 3 && tok[1] == "t") data.threshold = parse_int(tok[2], line_no);
            continue;
        }
        if (tok[0] == "p") {
            if (saw_header) throw ParseError("second problem line on line " + std::to_string(line_no));
            if (tok.size() != 4 || tok[1] != "edge")
                throw ParseError("problem line must read 'p edge <n> <m>' (line " +
                                 std::to_string(line_no) + ")");
            declared_n = parse_int(tok[2], line_no);
            declared_m = parse_int(tok[3], line_no);
            if (declared_n < 0 || declared_m < 0)
                throw ParseError("negative counts on problem line " + std::to_string(line_no));
            data.graph = Graph::with_vertices(declared_n);
            saw_header = true;
            continue;
        }
        if (!saw_header)
            throw ParseError("'" + tok[0] + "' line before problem line (line " +
                             std::to_string(line_no) + ")");

        auto check_vertex = [&](int v) {
            if (v < 0 || v >= declared_n)
                throw ParseError("vertex " + std::to_string(v) + " outside 0.." +
                                 std::to_string(declared_n - 1) + " (line " +
                                 std::to_string(line_no) + ")");
        };

        if (tok[0] == "e") {
            if (tok.size() != 3) throw ParseError("edge line needs two endpoints (line " +
                                                  std::to_string(line_no) + ")");
            int u = parse_int(tok[1], line_no), v = parse_int(tok[2], line_no);
            check_vertex(u);
            check_vertex(v);
            if (u == v) throw ParseError("loop edge on line " + std::to_string(line_no));
            if (data.graph.has_edge(u, v))
                throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v) +
                                 " (line " + std::to_string(line_no) + ")");
            data.graph.add_edge(u, v);
            ++edges_seen;
        } else if (tok[0] == "s") {
            if (tok.size() != 2) throw ParseError("s line needs one vertex (line " +
                                                  std::to_string(line_no) + ")");
            int v = parse_int(tok[1], line_no);
            check_vertex(v);
            data.s_set.insert(v);
        } else if (tok[0] == "g") {
            if (tok.size() != 3) throw ParseError("g line needs vertex and budget (line " +
                                                  std::to_string(line_no) + ")");
            int v = parse_int(tok[1], line_no), b = parse_int(tok[2], line_no);
            check_vertex(v);
            if (b != 1 && b != 2)
                throw ParseError("budget must be 1 or 2 (line " + std::to_string(line_no) + ")");
            data.budgets[v] = b;
        } else {
            throw ParseError("unknown line type '" + tok[0] + "' (line " + std::to_string(line_no) +
                             ")");
        }
    }

    if (!saw_header) throw ParseError("missing 'p edge <n> <m>' line");
    if (edges_seen != declared_m)
        throw ParseError("problem line declares " + std::to_string(declared_m) + " edges, found " +
                         std::to_string(edges_seen));
    return data;
}

InstanceData load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance_text(buf.str());
}

std::string write_instance_text(const Graph& g, const std::set<int>& s_set,
                                const std::map<int, int>& budgets,
                                const std::vector<std::string>& header_comments) {
    int n = g.vertex_count();
    for (int i = 0; i < n; ++i)
        if (!g.has_vertex(i))
            throw std::invalid_argument("instance files need dense vertex ids 0..n-1");

    std::ostringstream out;
    for (const std::string& comment : header_comments) out << "c " << comment << '\n';
    out << "p edge " << n << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
    for (int v : s_set) out << "s " << v << '\n';
    for (const auto& [v, b] : budgets) out << "g " << v << ' ' << b << '\n';
    return out.str();
}

void save_instance_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << text;
}

} // namespace meqc
