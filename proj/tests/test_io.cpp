#include "doctest.h"

#include <sstream>

#include "meqc/errors.hpp"
#include "meqc/generators.hpp"
#include "meqc/graph_io.hpp"
#include "support/corpus.hpp"

using namespace meqc;

TEST_CASE("instance parser reads a full file") {
    const std::string text =
        "c example instance\n"
        "c t 4\n"
        "c apex 0 2\n"
        "p edge 4 3\n"
        "e 0 1\n"
        "e 1 2\n"
        "\n"
        "e 2 3\n"
        "s 1\n"
        "g 0 2\n"
        "g 3 1\n";
    InstanceData data = parse_instance_text(text);
    CHECK(data.graph.vertex_count() == 4);
    CHECK(data.graph.edge_count() == 3);
    CHECK(data.s_set == std::set<int>{1});
    CHECK(data.budgets == std::map<int, int>{{0, 2}, {3, 1}});
    CHECK(data.apex_hints == std::vector<int>{0, 2});
    REQUIRE(data.threshold.has_value());
    CHECK(*data.threshold == 4);
}

TEST_CASE("instance parser rejects malformed input") {
    CHECK_THROWS_AS(parse_instance_text(""), ParseError);
    CHECK_THROWS_AS(parse_instance_text("e 0 1\np edge 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance_text("p edge 2 1\ne 0 1\ne 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance_text("p edge 2 1\ne 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_instance_text("p edge 2 1\ne 0 5\n"), ParseError);
    CHECK_THROWS_AS(parse_instance_text("p edge 2 2\ne 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance_text("p edge 2 0\ns 9\n"), ParseError);
    CHECK_THROWS_AS(parse_instance_text("p edge 2 0\ng 0 3\n"), ParseError);
    CHECK_THROWS_AS(parse_instance_text("p edge 2 0\ng 0 two\n"), ParseError);
    CHECK_THROWS_AS(parse_instance_text("p edge 2 1\ne 0 1 junk\n"), ParseError);
    CHECK_THROWS_AS(parse_instance_text("p edge 2 0\nq 3\n"), ParseError);
}

TEST_CASE("instance writer round-trips seeded instances") {
    for (unsigned seed = 0; seed < 30; ++seed) {
        InstanceData data;
        data.graph = testing::seeded_graph(seed, 14);
        data.s_set = testing::seeded_s_set(seed, data.graph);
        data.budgets = testing::seeded_budgets(seed, data.graph);
        std::vector<std::string> comments;
        if (seed % 3 == 0) {
            data.threshold = static_cast<int>(seed) + 1;
            comments.push_back("t " + std::to_string(*data.threshold));
        }
        if (seed % 4 == 0) {
            data.apex_hints = {0};
            comments.push_back("apex 0");
        }

        std::string text = write_instance_text(data.graph, data.s_set, data.budgets, comments);
        InstanceData back = parse_instance_text(text);
        CHECK(back.graph.vertices() == data.graph.vertices());
        CHECK(back.graph.edges() == data.graph.edges());
        CHECK(back.s_set == data.s_set);
        CHECK(back.budgets == data.budgets);
        CHECK(back.threshold == data.threshold);
        CHECK(back.apex_hints == data.apex_hints);
    }
}

TEST_CASE("colouring text round-trips") {
    Graph g = path_graph(3);
    EdgeColouring f;
    f.set(Edge(0, 1), 2);
    f.set(Edge(1, 2), 0);
    std::string text = write_colouring_text(f);
    EdgeColouring back = parse_colouring_text(text, g);
    CHECK(back.colour == f.colour);
}

TEST_CASE("colouring parser enforces coverage and membership") {
    Graph g = path_graph(3);
    CHECK_THROWS_AS(parse_colouring_text("0 1 1\n", g), ParseError);
    CHECK_THROWS_AS(parse_colouring_text("0 1 1\n1 2 1\n0 2 1\n", g), ParseError);
    CHECK_THROWS_AS(parse_colouring_text("0 1 1\n1 2 1\n0 1 2\n", g), ParseError);
    CHECK_THROWS_AS(parse_colouring_text("0 1 -1\n1 2 1\n", g), ParseError);
    EdgeColouring ok = parse_colouring_text("c comment\n1 0 3\n1 2 0\n", g);
    CHECK(ok.at(Edge(0, 1)) == 3);
}
