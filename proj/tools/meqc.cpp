#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "meqc/baker.hpp"
#include "meqc/colouring.hpp"
#include "meqc/errors.hpp"
#include "meqc/exact.hpp"
#include "meqc/generators.hpp"
#include "meqc/graph_io.hpp"
#include "meqc/reductions.hpp"

namespace {

using namespace meqc;

struct Config {
    std::string instance_path;
    std::string colouring_path;
    std::string cnf_path;
    std::string s_file;
    std::string out_path;
    std::string out_colouring;
    std::string r_seq;
    std::string apex_list;
    std::string strategy = "planar-bfs";
    std::string mode = "q";
    std::string family;
    int q = 2;
    int p = 2;
    int max_edges = 18;
    int max_classes = -1;
    int depth_budget = 16;
    int n = 4;
    int rows = 3;
    int cols = 3;
    int drop = 0;
    int apexes = 1;
    unsigned seed = 0;
    bool json = false;
    bool parallel = false;
    bool g_budgets = false;
};

std::vector<long long> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<long long> values;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            values.push_back(std::stoll(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ParseError("bad " + what + " entry '" + item + "'");
        }
    }
    if (values.empty()) throw ParseError("empty " + what + " list");
    return values;
}

std::set<int> read_s_file(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::set<int> s;
    int v = 0;
    while (in >> v) {
        if (!g.has_vertex(v))
            throw ParseError("s-file vertex " + std::to_string(v) + " not in graph");
        s.insert(v);
    }
    if (!in.eof()) throw ParseError("s-file '" + path + "' holds a non-integer token");
    return s;
}

SolveLimits limits_from(const Config& cfg) {
    SolveLimits limits;
    limits.max_edges_exhaustive = cfg.max_edges;
    if (cfg.max_classes >= 0) limits.max_classes = cfg.max_classes;
    return limits;
}

struct Report {
    EdgeColouring colouring;
    int lower = 0;
    int upper = 0;
    std::optional<double> certified_ratio;
    bool optimal = false;
    int rounds_used = 0;
    long long elapsed_ms = 0;
};

void emit_report(const Report& rep, bool json) {
    int nonzero = spread_nonzero(rep.colouring);
    int total = spread_total(rep.colouring);
    if (json) {
        nlohmann::ordered_json j;
        j["spread_nonzero"] = nonzero;
        j["spread_total"] = total;
        auto arr = nlohmann::ordered_json::array();
        for (const auto& [e, c] : rep.colouring.colour) arr.push_back({e.u, e.v, c});
        j["colouring"] = std::move(arr);
        j["lower_bound"] = rep.lower;
        j["upper_bound"] = rep.upper;
        if (rep.certified_ratio)
            j["certified_ratio"] = *rep.certified_ratio;
        else
            j["certified_ratio"] = nullptr;
        j["optimal"] = rep.optimal;
        j["rounds_used"] = rep.rounds_used;
        // pinned so that repeated runs stay byte-identical
        j["elapsed_ms"] = 0;
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::cout << "spread nonzero: " << nonzero << '\n';
    std::cout << "spread total: " << total << '\n';
    std::cout << "lower bound: " << rep.lower << '\n';
    std::cout << "upper bound: " << rep.upper << '\n';
    if (rep.certified_ratio)
        std::cout << "certified ratio: " << *rep.certified_ratio << '\n';
    else
        std::cout << "certified ratio: n/a" << '\n';
    if (rep.upper > 0)
        std::cout << "a-posteriori ratio: " << static_cast<double>(nonzero) / rep.upper << '\n';
    std::cout << "optimal: " << (rep.optimal ? "yes" : "no") << '\n';
    std::cout << "rounds used: " << rep.rounds_used << '\n';
    std::cout << "elapsed ms: " << rep.elapsed_ms << '\n';
    std::cout << "colouring:" << '\n';
    std::cout << write_colouring_text(rep.colouring);
}

void save_witness(const Config& cfg, const EdgeColouring& f) {
    if (cfg.out_colouring.empty()) return;
    std::ofstream out(cfg.out_colouring);
    if (!out) throw ParseError("cannot write '" + cfg.out_colouring + "'");
    out << write_colouring_text(f);
}

Instance load_solve_instance(const Config& cfg, InstanceData& data) {
    data = load_instance_file(cfg.instance_path);
    Instance inst;
    inst.graph = data.graph;
    inst.s_set = cfg.s_file.empty() ? data.s_set : read_s_file(cfg.s_file, data.graph);
    inst.q = cfg.q;
    validate_instance(inst);
    return inst;
}

void fill_bounds(const Instance& inst, Report& rep) {
    if (inst.q >= 2) {
        BoundsResult b = bounds(inst);
        rep.lower = b.lower;
        rep.upper = b.upper;
    }
}

int cmd_exact(const Config& cfg) {
    auto start = std::chrono::steady_clock::now();
    InstanceData data;
    Instance inst = load_solve_instance(cfg, data);
    Report rep;

    if (cfg.g_budgets) {
        std::map<int, int> budgets;
        for (int v : inst.graph.vertices()) {
            auto it = data.budgets.find(v);
            budgets[v] = it == data.budgets.end() ? 2 : it->second;
        }
        GSpreadResult res = exact_g_spread(inst.graph, budgets, limits_from(cfg));
        if (!is_valid_g_colouring(inst.graph, budgets, res.witness))
            throw std::logic_error("solver produced an invalid witness");
        rep.colouring = res.witness;
        rep.lower = rep.upper = res.value;
        rep.optimal = true;
    } else {
        SolveResult res = solve_exact(inst, limits_from(cfg));
        if (!is_composable(inst, res.witness))
            throw std::logic_error("solver produced a non-composable witness");
        rep.colouring = inst.s_set.empty() ? relabel_zero_free(res.witness) : res.witness;
        rep.optimal = res.optimal;
        rep.lower = rep.upper = res.value;
        fill_bounds(inst, rep);
        if (res.optimal) rep.certified_ratio = 1.0;
    }

    rep.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
            .count();
    save_witness(cfg, rep.colouring);
    emit_report(rep, cfg.json);
    return 0;
}

int cmd_bounds_greedy(const Config& cfg, bool greedy) {
    auto start = std::chrono::steady_clock::now();
    InstanceData data;
    Instance inst = load_solve_instance(cfg, data);

    BoundsResult b = bounds(inst);
    EdgeColouring witness = matching_colouring(inst.graph, b.matching);
    if (!is_composable(inst, witness))
        throw std::logic_error("matching colouring is not composable");

    Report rep;
    rep.colouring = inst.s_set.empty() ? relabel_zero_free(witness) : witness;
    rep.lower = b.lower;
    rep.upper = b.upper;
    rep.optimal = false;
    rep.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
            .count();
    if (greedy) save_witness(cfg, rep.colouring);
    emit_report(rep, cfg.json);
    return 0;
}

int cmd_ptas(const Config& cfg) {
    auto start = std::chrono::steady_clock::now();
    InstanceData data;
    Instance inst = load_solve_instance(cfg, data);

    RSequence rs = [&] {
        if (cfg.r_seq.empty()) return default_r_sequence(cfg.p, cfg.q);
        std::vector<std::int64_t> terms;
        for (long long t : parse_int_list(cfg.r_seq, "schedule")) terms.push_back(t);
        return RSequence::from_terms(std::move(terms));
    }();

    StrategyConfig strat_cfg;
    if (!cfg.apex_list.empty())
        for (long long a : parse_int_list(cfg.apex_list, "apex"))
            strat_cfg.apexes.insert(static_cast<int>(a));
    else
        strat_cfg.apexes.insert(data.apex_hints.begin(), data.apex_hints.end());

    Strategy strategy = make_strategy(cfg.strategy, strat_cfg);
    PtasReport res =
        ptas_solve(inst, rs, strategy, cfg.depth_budget, limits_from(cfg), cfg.parallel);

    Report rep;
    rep.colouring = inst.s_set.empty() ? relabel_zero_free(res.witness) : res.witness;
    rep.certified_ratio = res.certified_ratio;
    rep.rounds_used = res.rounds_used;
    rep.optimal = res.certified_ratio && *res.certified_ratio == 1.0;
    fill_bounds(inst, rep);
    rep.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
            .count();
    save_witness(cfg, rep.colouring);
    emit_report(rep, cfg.json);
    return 0;
}

int cmd_verify(const Config& cfg) {
    InstanceData data = load_instance_file(cfg.instance_path);
    std::ifstream in(cfg.colouring_path);
    if (!in) throw ParseError("cannot open '" + cfg.colouring_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    EdgeColouring f = parse_colouring_text(buf.str(), data.graph);

    std::set<int> s_set = cfg.s_file.empty() ? data.s_set : read_s_file(cfg.s_file, data.graph);

    auto fail = [&](int v, const std::set<int>& palette, int budget) {
        std::cout << "FAIL vertex " << v << ": palette {";
        bool first = true;
        for (int c : palette) {
            if (!first) std::cout << ',';
            std::cout << c;
            first = false;
        }
        std::cout << "} exceeds budget " << budget << '\n';
        return 1;
    };

    if (cfg.mode == "q" || cfg.mode == "composable") {
        for (int v : data.graph.vertices()) {
            std::set<int> palette = incident_palette(data.graph, f, v);
            if (static_cast<int>(palette.size()) > cfg.q) return fail(v, palette, cfg.q);
        }
        if (cfg.mode == "composable")
            for (int v : s_set) {
                std::set<int> palette = incident_palette(data.graph, f, v);
                palette.erase(0);
                if (static_cast<int>(palette.size()) > cfg.q - 1)
                    return fail(v, palette, cfg.q - 1);
            }
    } else if (cfg.mode == "g") {
        for (int v : data.graph.vertices()) {
            auto it = data.budgets.find(v);
            int budget = it == data.budgets.end() ? 2 : it->second;
            std::set<int> palette = incident_palette(data.graph, f, v);
            if (static_cast<int>(palette.size()) > budget) return fail(v, palette, budget);
        }
    } else {
        throw ParseError("unknown verify mode '" + cfg.mode + "'");
    }
    std::cout << "PASS" << '\n';
    return 0;
}

int cmd_reduce(const Config& cfg) {
    std::ifstream in(cfg.cnf_path);
    if (!in) throw ParseError("cannot open '" + cfg.cnf_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    CnfFormula phi = parse_cnf(buf.str());
    ReductionArtifact art = reduce_sat(phi);

    std::string prefix = cfg.out_path;
    if (prefix.empty()) {
        prefix = cfg.cnf_path;
        size_t dot = prefix.find_last_of('.');
        if (dot != std::string::npos && prefix.find('/', dot) == std::string::npos)
            prefix = prefix.substr(0, dot);
    }

    std::vector<std::string> comments;
    comments.push_back("t " + std::to_string(art.threshold));
    comments.push_back("apex 0");
    for (const auto& [v, role] : art.roles) {
        std::string line = "role " + std::to_string(v) + " ";
        switch (role.role) {
        case VertexRole::Apex: line += "apex"; break;
        case VertexRole::Clause: line += "clause " + std::to_string(role.clause); break;
        case VertexRole::VarCopy:
            line += "copy " + std::to_string(role.var) + " " + std::to_string(role.occ_a);
            break;
        case VertexRole::Conflict:
            line += "conflict " + std::to_string(role.var) + " " + std::to_string(role.occ_a) +
                    " " + std::to_string(role.occ_b);
            break;
        }
        comments.push_back(line);
    }

    std::string budget_file = prefix + "_g12.gr";
    save_instance_file(budget_file, write_instance_text(art.graph, {}, art.budgets, comments));
    std::cout << "wrote " << budget_file << " (threshold " << art.threshold << ")" << '\n';

    if (cfg.q > 2) {
        PendantResult lifted = pendant_transform(art.graph, art.budgets, cfg.q, art.threshold);
        std::vector<std::string> lifted_comments;
        lifted_comments.push_back("t " + std::to_string(lifted.threshold));
        lifted_comments.push_back("q " + std::to_string(cfg.q));
        std::string lifted_file = prefix + "_q" + std::to_string(cfg.q) + ".gr";
        save_instance_file(lifted_file,
                           write_instance_text(lifted.graph, {}, {}, lifted_comments));
        std::cout << "wrote " << lifted_file << " (threshold " << lifted.threshold << ")" << '\n';
    }
    std::cerr << "note: planarity of the clause-variable incidence structure is not verified"
              << '\n';
    return 0;
}

int cmd_gen(const Config& cfg) {
    Graph g;
    std::vector<std::string> comments;
    if (cfg.family == "grid") {
        g = grid_graph(cfg.rows, cfg.cols);
    } else if (cfg.family == "path") {
        g = path_graph(cfg.n);
    } else if (cfg.family == "cycle") {
        g = cycle_graph(cfg.n);
    } else if (cfg.family == "star") {
        g = star_graph(cfg.n);
    } else if (cfg.family == "complete") {
        g = complete_graph(cfg.n);
    } else if (cfg.family == "random-planar-sub") {
        g = random_planar_subgraph(cfg.rows, cfg.cols, cfg.drop, cfg.seed);
    } else if (cfg.family == "apex") {
        ApexInstance inst = apex_over_grid(cfg.rows, cfg.cols, cfg.apexes, cfg.seed);
        g = inst.graph;
        for (int a : inst.apexes) comments.push_back("apex " + std::to_string(a));
    } else {
        throw ParseError("unknown family '" + cfg.family + "'");
    }

    std::string text = write_instance_text(g, {}, {}, comments);
    if (cfg.out_path.empty())
        std::cout << text;
    else
        save_instance_file(cfg.out_path, text);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    Config cfg;
    CLI::App app{"maximum edge q-colouring toolkit"};
    app.require_subcommand(1);

    auto add_instance_arg = [&](CLI::App* cmd) {
        cmd->add_option("instance", cfg.instance_path, "instance file")->required();
        cmd->add_option("--q", cfg.q, "palette budget per vertex");
        cmd->add_option("--s-file", cfg.s_file, "file listing boundary vertices");
        cmd->add_flag("--json", cfg.json, "structured output");
    };

    CLI::App* exact_cmd = app.add_subcommand("exact", "solve exactly by exhaustive search");
    add_instance_arg(exact_cmd);
    exact_cmd->add_option("--max-edges", cfg.max_edges, "exhaustive-search edge limit");
    exact_cmd->add_option("--max-classes", cfg.max_classes, "cap on counted colours");
    exact_cmd->add_flag("--g-budgets", cfg.g_budgets, "use per-vertex budgets from g lines");
    exact_cmd->add_option("--out-colouring", cfg.out_colouring, "write witness colouring");

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "matching sandwich bounds");
    add_instance_arg(bounds_cmd);

    CLI::App* greedy_cmd = app.add_subcommand("greedy", "greedy matching colouring");
    add_instance_arg(greedy_cmd);
    greedy_cmd->add_option("--out-colouring", cfg.out_colouring, "write witness colouring");

    CLI::App* ptas_cmd = app.add_subcommand("ptas", "layering-game approximation");
    add_instance_arg(ptas_cmd);
    ptas_cmd->add_option("--p", cfg.p, "accuracy parameter; ratio at least 1-1/p");
    ptas_cmd->add_option("--r-seq", cfg.r_seq, "explicit layering widths a,b,c");
    ptas_cmd->add_option("--strategy", cfg.strategy,
                         "planar-bfs | apex-first | delete-max-degree");
    ptas_cmd->add_option("--apex", cfg.apex_list, "declared apex vertices a,b,c");
    ptas_cmd->add_option("--depth-budget", cfg.depth_budget, "maximum game rounds");
    ptas_cmd->add_option("--max-edges", cfg.max_edges, "exhaustive-search edge limit");
    ptas_cmd->add_flag("--parallel", cfg.parallel, "evaluate layering residues concurrently");
    ptas_cmd->add_option("--out-colouring", cfg.out_colouring, "write witness colouring");

    CLI::App* verify_cmd = app.add_subcommand("verify", "check a colouring file");
    verify_cmd->add_option("instance", cfg.instance_path, "instance file")->required();
    verify_cmd->add_option("colouring", cfg.colouring_path, "colouring file")->required();
    verify_cmd->add_option("--mode", cfg.mode, "q | composable | g");
    verify_cmd->add_option("--q", cfg.q, "palette budget per vertex");
    verify_cmd->add_option("--s-file", cfg.s_file, "file listing boundary vertices");

    CLI::App* reduce_cmd = app.add_subcommand("reduce", "satisfiability to colouring instance");
    reduce_cmd->add_option("cnf", cfg.cnf_path, "DIMACS CNF file")->required();
    reduce_cmd->add_option("--q", cfg.q, "also emit the pendant-lifted instance for this q");
    reduce_cmd->add_option("--out", cfg.out_path, "output file prefix");

    CLI::App* gen_cmd = app.add_subcommand("gen", "generate an instance file");
    gen_cmd->add_option("family", cfg.family,
                        "grid | path | cycle | star | complete | random-planar-sub | apex")
        ->required();
    gen_cmd->add_option("--n", cfg.n, "size for path/cycle/star/complete");
    gen_cmd->add_option("--rows", cfg.rows, "grid rows");
    gen_cmd->add_option("--cols", cfg.cols, "grid columns");
    gen_cmd->add_option("--drop", cfg.drop, "edges to delete (random-planar-sub)");
    gen_cmd->add_option("--apexes", cfg.apexes, "apex count (apex family)");
    gen_cmd->add_option("--seed", cfg.seed, "random seed");
    gen_cmd->add_option("--out", cfg.out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(exact_cmd)) return cmd_exact(cfg);
        if (app.got_subcommand(bounds_cmd)) return cmd_bounds_greedy(cfg, false);
        if (app.got_subcommand(greedy_cmd)) return cmd_bounds_greedy(cfg, true);
        if (app.got_subcommand(ptas_cmd)) return cmd_ptas(cfg);
        if (app.got_subcommand(verify_cmd)) return cmd_verify(cfg);
        if (app.got_subcommand(reduce_cmd)) return cmd_reduce(cfg);
        if (app.got_subcommand(gen_cmd)) return cmd_gen(cfg);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const TooLargeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}
