#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <set>

#include "meqc/generators.hpp"
#include "meqc/graph.hpp"
#include "support/corpus.hpp"

using namespace meqc;

namespace {

Graph triangle() {
    Graph g = Graph::with_vertices(3);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    return g;
}

} // namespace

TEST_CASE("edges normalise endpoints and reject loops") {
    Edge e(5, 2);
    CHECK(e.u == 2);
    CHECK(e.v == 5);
    CHECK_THROWS_AS(Edge(3, 3), std::invalid_argument);
}

TEST_CASE("graph construction rejects duplicates and unknown endpoints") {
    Graph g = Graph::with_vertices(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 7), std::invalid_argument);
    CHECK_THROWS_AS(g.add_vertex(2), std::invalid_argument);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 1);
    CHECK(g.degree(2) == 0);
}

TEST_CASE("bfs layering levels a path by distance") {
    Graph p3 = path_graph(3);
    Layering lam = bfs_layering(p3);
    CHECK(lam.level.at(0) == 0);
    CHECK(lam.level.at(1) == 1);
    CHECK(lam.level.at(2) == 2);
}

TEST_CASE("bfs layering on a triangle") {
    Layering lam = bfs_layering(triangle());
    CHECK(lam.level.at(0) == 0);
    CHECK(lam.level.at(1) == 1);
    CHECK(lam.level.at(2) == 1);
}

TEST_CASE("isolated vertices spread over consecutive levels") {
    Graph g = Graph::with_vertices(3);
    Layering lam = bfs_layering(g);
    CHECK(lam.level.at(0) == 0);
    CHECK(lam.level.at(1) == 1);
    CHECK(lam.level.at(2) == 2);
}

TEST_CASE("bfs layering is valid on random graphs") {
    for (unsigned seed = 0; seed < 30; ++seed) {
        Graph g = testing::seeded_graph(seed, 12);
        CHECK(is_valid_layering(g, bfs_layering(g)));
    }
}

TEST_CASE("greedy matching picks the first available edges") {
    Graph p4 = path_graph(4);
    Matching m = greedy_maximal_matching(p4);
    REQUIRE(m.size() == 2);
    CHECK(m.edges[0] == Edge(0, 1));
    CHECK(m.edges[1] == Edge(2, 3));

    Matching t = greedy_maximal_matching(triangle());
    REQUIRE(t.size() == 1);
    CHECK(t.edges[0] == Edge(0, 1));

    CHECK(greedy_maximal_matching(Graph::with_vertices(4)).size() == 0);
}

TEST_CASE("greedy matching is maximal") {
    for (unsigned seed = 0; seed < 30; ++seed) {
        Graph g = testing::seeded_graph(seed, 12);
        Matching m = greedy_maximal_matching(g);
        CHECK(is_matching_of(g, m));
        std::set<int> covered;
        for (const Edge& e : m.edges) {
            covered.insert(e.u);
            covered.insert(e.v);
        }
        for (const Edge& e : g.edges())
            CHECK((covered.contains(e.u) || covered.contains(e.v)));
    }
}

TEST_CASE("stratify removes one residue of crossing edges") {
    Graph p6 = path_graph(6);
    Stratification s = stratify(p6, bfs_layering(p6), 3, 1);
    REQUIRE(s.removed.size() == 2);
    CHECK(s.removed[0] == Edge(1, 2));
    CHECK(s.removed[1] == Edge(4, 5));
    CHECK(s.boundary == std::set<int>{1, 2, 4, 5});
    CHECK(s.residual.edge_count() == 3);
    REQUIRE(s.parts.size() == 3);
    CHECK(s.parts[0] == std::vector<int>{0, 1});
    CHECK(s.parts[1] == std::vector<int>{2, 3, 4});
    CHECK(s.parts[2] == std::vector<int>{5});
}

TEST_CASE("stratify on a triangle with r=2") {
    Stratification s = stratify(triangle(), bfs_layering(triangle()), 2, 0);
    REQUIRE(s.removed.size() == 2);
    CHECK(s.boundary == std::set<int>{0, 1, 2});
    REQUIRE(s.residual.edge_count() == 1);
    CHECK(s.residual.edges()[0] == Edge(1, 2));
    REQUIRE(s.parts.size() == 2);
    CHECK(s.parts[0] == std::vector<int>{0});
    CHECK(s.parts[1] == std::vector<int>{1, 2});
}

TEST_CASE("stratify keeps a flat graph intact") {
    Graph g = Graph::with_vertices(2);
    g.add_edge(0, 1);
    Layering lam;
    lam.level = {{0, 0}, {1, 0}};
    Stratification s = stratify(g, lam, 2, 0);
    CHECK(s.removed.empty());
    CHECK(s.boundary.empty());
    CHECK(s.residual.edge_count() == 1);
}

TEST_CASE("stratify validates its arguments") {
    Graph p3 = path_graph(3);
    Layering lam = bfs_layering(p3);
    CHECK_THROWS_AS(stratify(p3, lam, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(stratify(p3, lam, 3, 3), std::invalid_argument);
    Layering bad;
    bad.level = {{0, 0}, {1, 5}, {2, 6}};
    CHECK_THROWS_AS(stratify(p3, bad, 3, 0), std::invalid_argument);
}

TEST_CASE("stratification parts partition the vertices within narrow bands") {
    for (unsigned seed = 0; seed < 25; ++seed) {
        Graph g = testing::seeded_graph(seed, 12);
        Layering lam = bfs_layering(g);
        for (int r : {2, 3, 5})
            for (int m = 0; m < r; ++m) {
                Stratification s = stratify(g, lam, r, m);
                CHECK(static_cast<int>(s.removed.size()) + s.residual.edge_count() ==
                      g.edge_count());

                std::set<int> seen;
                for (const auto& part : s.parts) {
                    REQUIRE(!part.empty());
                    int lo = lam.level.at(part.front()), hi = lo;
                    for (int v : part) {
                        CHECK(!seen.contains(v));
                        seen.insert(v);
                        lo = std::min(lo, lam.level.at(v));
                        hi = std::max(hi, lam.level.at(v));
                    }
                    CHECK(hi - lo < r);
                }
                CHECK(static_cast<int>(seen.size()) == g.vertex_count());

                std::map<int, int> part_of;
                for (size_t i = 0; i < s.parts.size(); ++i)
                    for (int v : s.parts[i]) part_of[v] = static_cast<int>(i);
                for (const Edge& e : s.residual.edges())
                    CHECK(part_of.at(e.u) == part_of.at(e.v));
            }
    }
}

TEST_CASE("connected components are ordered and sorted") {
    Graph g = Graph::with_vertices(5);
    g.add_edge(3, 4);
    g.add_edge(0, 2);
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0, 2});
    CHECK(comps[1] == std::vector<int>{1});
    CHECK(comps[2] == std::vector<int>{3, 4});

    CHECK(connected_components(Graph()).empty());
    CHECK(connected_components(grid_graph(3, 3)).size() == 1);
}

TEST_CASE("delete vertex keeps remaining ids") {
    Graph g = delete_vertex(triangle(), 1);
    CHECK(g.vertex_count() == 2);
    CHECK(g.has_vertex(0));
    CHECK(g.has_vertex(2));
    REQUIRE(g.edge_count() == 1);
    CHECK(g.edges()[0] == Edge(0, 2));

    Graph star = star_graph(3);
    Graph rest = delete_vertex(star, 0);
    CHECK(rest.vertex_count() == 3);
    CHECK(rest.edge_count() == 0);

    CHECK_THROWS_AS(delete_vertex(g, 1), std::invalid_argument);
}

TEST_CASE("induced subgraph keeps order") {
    Graph grid = grid_graph(2, 2);
    Graph sub = grid.induced({0, 1, 3});
    CHECK(sub.vertices() == std::vector<int>{0, 1, 3});
    REQUIRE(sub.edge_count() == 2);
    CHECK(sub.edges()[0] == Edge(0, 1));
    CHECK(sub.edges()[1] == Edge(1, 3));
}
