#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "splitenum/graphs.hpp"
#include "splitenum/series.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

using namespace splitenum;

namespace {

Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph diamond_graph() { return from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

Graph bowtie_graph() { return from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}); }

// every graph on n labeled vertices, one per edge bitmask (colex pair order)
template <class Fn>
void scan_graphs(int n, Fn fn, unsigned stride = 1) {
    int pairs = n * (n - 1) / 2;
    for (unsigned mask = 0; mask < (1u << pairs); mask += stride) {
        Graph g(n);
        int idx = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++idx)
                if (mask >> idx & 1) g.add_edge(i, j);
        fn(g);
    }
}

}  // namespace

TEST_CASE("graph basics") {
    Graph g(3);
    CHECK(g.size() == 3);
    CHECK_FALSE(g.edge(0, 1));
    g.add_edge(0, 1);
    CHECK(g.edge(0, 1));
    CHECK(g.edge(1, 0));
    CHECK(g.degree(0) == 1);
    CHECK(g.edge_count() == 1);
    g.remove_edge(0, 1);
    CHECK(g.edge_count() == 0);
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(Graph(17), std::invalid_argument);
}

TEST_CASE("induced subgraphs relabel by bit position") {
    Graph g = path_graph(4);
    Graph h = g.induced(0b1011);  // vertices 0,1,3
    CHECK(h.size() == 3);
    CHECK(h.edge(0, 1));
    CHECK_FALSE(h.edge(1, 2));
    CHECK_FALSE(h.edge(0, 2));
}

TEST_CASE("distances") {
    auto d = distances(path_graph(3));
    CHECK(d[0][2] == 2);
    CHECK(d[0][1] == 1);
    auto k = distances(complete_graph(4));
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) CHECK(k[u][v] == (u == v ? 0 : 1));
    auto iso = distances(Graph(2));
    CHECK(iso[0][1] == kUnreachable);
}

TEST_CASE("connectivity") {
    CHECK(is_connected(path_graph(5)));
    CHECK(is_connected(Graph(1)));
    CHECK(is_connected(Graph(0)));
    CHECK_FALSE(is_connected(Graph(2)));
    CHECK_FALSE(is_connected(from_edges(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("induced pattern detection") {
    CHECK(has_induced(cycle_graph(4), Pattern::c4));
    CHECK_FALSE(has_induced(diamond_graph(), Pattern::c4));
    CHECK(has_induced(diamond_graph(), Pattern::diamond));
    CHECK(has_induced(complete_graph(5), Pattern::k4plus));
    CHECK_FALSE(has_induced(complete_graph(3), Pattern::k4plus));
    for (Pattern p : {Pattern::c4, Pattern::diamond, Pattern::k4plus}) {
        CHECK_FALSE(has_induced(cycle_graph(5), p));
        CHECK_FALSE(has_induced(path_graph(4), p));
    }
    // K4 contains diamonds as subgraphs but none induced
    CHECK_FALSE(has_induced(complete_graph(4), Pattern::diamond));
    CHECK(has_induced(diamond_graph(), Pattern::diamond));
}

TEST_CASE("pendant edges and bridges") {
    CHECK(has_pendant_edge(path_graph(3)));
    CHECK(has_bridge(path_graph(3)));
    CHECK_FALSE(has_pendant_edge(cycle_graph(4)));
    CHECK_FALSE(has_bridge(cycle_graph(4)));
    // two triangles joined by an edge: an internal bridge, no pendant
    Graph g = from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
    CHECK(has_bridge(g));
    CHECK_FALSE(has_pendant_edge(g));
    CHECK_THROWS_AS(has_bridge(Graph(2)), std::domain_error);
    CHECK_THROWS_AS(has_pendant_edge(Graph(2)), std::domain_error);
}

TEST_CASE("biconnected components") {
    CHECK(blocks(complete_graph(4)).size() == 1);
    CHECK(blocks(path_graph(3)).size() == 2);
    auto bw = blocks(bowtie_graph());
    CHECK(bw.size() == 2);
    for (auto m : bw) CHECK(std::popcount(static_cast<unsigned>(m)) == 3);
    CHECK(blocks(Graph(1)).empty());
}

TEST_CASE("membership spot checks") {
    using GC = GraphClass;
    Graph k1(1), k2 = complete_graph(2), k3 = complete_graph(3), k4 = complete_graph(4);
    Graph c4 = cycle_graph(4), c5 = cycle_graph(5), p4 = path_graph(4);

    CHECK(is_member(k3, GC::block));
    CHECK(is_member(k3, GC::cactus3));
    CHECK(is_member(k3, GC::cactus23));
    CHECK(is_member(k3, GC::ptolemaic));
    CHECK_FALSE(is_member(k3, GC::cactus4));

    CHECK(is_member(k4, GC::block));
    CHECK(is_member(k4, GC::ptolemaic));
    CHECK(is_member(k4, GC::distance_hereditary));
    CHECK_FALSE(is_member(k4, GC::cactus23));
    CHECK_FALSE(is_member(k4, GC::cactus3));

    CHECK_FALSE(is_member(c4, GC::ptolemaic));
    CHECK_FALSE(is_member(c4, GC::chordal));
    CHECK(is_member(c4, GC::distance_hereditary));
    CHECK_FALSE(is_member(c4, GC::weakly_geodetic));
    CHECK(is_member(c4, GC::cactus4));
    CHECK_FALSE(is_member(c4, GC::cactus23));
    CHECK_FALSE(is_member(c4, GC::block));

    CHECK_FALSE(is_member(c5, GC::distance_hereditary));
    CHECK_FALSE(is_member(c5, GC::chordal));
    CHECK_FALSE(is_member(c5, GC::ptolemaic));

    CHECK(is_member(p4, GC::block));
    CHECK(is_member(p4, GC::distance_hereditary));
    CHECK(is_member(p4, GC::chordal));
    CHECK_FALSE(is_member(p4, GC::cactus3));

    CHECK(is_member(k1, GC::block));
    CHECK(is_member(k1, GC::cactus23));
    CHECK_FALSE(is_member(k1, GC::cactus3));
    CHECK_FALSE(is_member(k1, GC::cactus4));
    CHECK(is_member(k1, GC::ptolemaic));
    CHECK(is_member(k1, GC::weakly_geodetic));

    CHECK(is_member(k2, GC::block));
    CHECK(is_member(k2, GC::cactus23));
    CHECK_FALSE(is_member(k2, GC::cactus3));

    CHECK(is_member(bowtie_graph(), GC::cactus3));
    CHECK(is_member(bowtie_graph(), GC::block));

    Graph paw = from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
    CHECK(is_member(paw, GC::block));
    CHECK(is_member(paw, GC::cactus23));
    CHECK_FALSE(is_member(paw, GC::cactus3));

    CHECK_FALSE(is_member(diamond_graph(), GC::block));
    CHECK(is_member(diamond_graph(), GC::ptolemaic));

    // two squares sharing one vertex
    Graph two_c4 = from_edges(
        7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}});
    CHECK(is_member(two_c4, GC::cactus4));
    CHECK_FALSE(is_member(two_c4, GC::cactus23));
    CHECK_FALSE(is_member(two_c4, GC::block));

    CHECK_THROWS_AS(is_member(Graph(2), GC::block), std::domain_error);
    CHECK_THROWS_AS(is_member(Graph(0), GC::block), std::domain_error);
}

TEST_CASE("labeled membership counts on small vertex sets") {
    // total connected, block, ptolemaic, {2,3}-cacti, 3-cacti, 4-cacti
    struct Row {
        int n;
        long connected, block, ptolemaic, cactus23, cactus3, cactus4;
    };
    const Row rows[] = {
        {1, 1, 1, 1, 1, 0, 0},
        {2, 1, 1, 1, 1, 0, 0},
        {3, 4, 4, 4, 4, 1, 0},
        {4, 38, 29, 35, 28, 0, 3},
        {5, 728, 311, 481, 290, 15, 0},
        {6, 26704, 4447, 9042, 3996, 0, 0},
    };
    for (const Row& r : rows) {
        long connected = 0, block = 0, ptolemaic = 0, c23 = 0, c3 = 0, c4 = 0;
        scan_graphs(r.n, [&](const Graph& g) {
            if (!is_connected(g)) return;
            ++connected;
            block += is_member(g, GraphClass::block);
            ptolemaic += is_member(g, GraphClass::ptolemaic);
            c23 += is_member(g, GraphClass::cactus23);
            c3 += is_member(g, GraphClass::cactus3);
            c4 += is_member(g, GraphClass::cactus4);
        });
        CAPTURE(r.n);
        CHECK(connected == r.connected);
        CHECK(block == r.block);
        CHECK(ptolemaic == r.ptolemaic);
        CHECK(c23 == r.cactus23);
        CHECK(c3 == r.cactus3);
        CHECK(c4 == r.cactus4);
    }
}

TEST_CASE("weakly geodetic iff no induced C4 and no diamond") {
    for (int n = 2; n <= 6; ++n) {
        scan_graphs(n, [](const Graph& g) {
            if (!is_connected(g)) return;
            bool wg = is_member(g, GraphClass::weakly_geodetic);
            bool ff = !has_induced(g, Pattern::c4) && !has_induced(g, Pattern::diamond);
            REQUIRE(wg == ff);
        });
    }
    // sampled sweep one size up
    scan_graphs(
        7,
        [](const Graph& g) {
            if (!is_connected(g)) return;
            bool wg = is_member(g, GraphClass::weakly_geodetic);
            bool ff = !has_induced(g, Pattern::c4) && !has_induced(g, Pattern::diamond);
            REQUIRE(wg == ff);
        },
        11);
}

TEST_CASE("block graphs are the C4- and diamond-free distance-hereditary graphs") {
    for (int n = 2; n <= 6; ++n) {
        scan_graphs(n, [](const Graph& g) {
            if (!is_connected(g)) return;
            bool via_blocks = is_member(g, GraphClass::block);
            bool via_dh = is_member(g, GraphClass::distance_hereditary) &&
                          !has_induced(g, Pattern::c4) && !has_induced(g, Pattern::diamond);
            REQUIRE(via_blocks == via_dh);
        });
    }
}

TEST_CASE("3-cacti are the bridgeless block graphs without K4") {
    // one-vertex graphs are excluded: the right side is vacuously true there
    // while a 3-cactus needs every vertex on a triangle
    for (int n = 2; n <= 6; ++n) {
        scan_graphs(n, [](const Graph& g) {
            if (!is_connected(g)) return;
            bool cactus = is_member(g, GraphClass::cactus3);
            bool other = is_member(g, GraphClass::block) && !has_bridge(g) &&
                         !has_induced(g, Pattern::k4plus);
            REQUIRE(cactus == other);
        });
    }
    scan_graphs(
        7,
        [](const Graph& g) {
            if (!is_connected(g)) return;
            REQUIRE(is_member(g, GraphClass::cactus3) ==
                    (is_member(g, GraphClass::block) && !has_bridge(g) &&
                     !has_induced(g, Pattern::k4plus)));
        },
        13);
}

TEST_CASE("ptolemaic dual routes agree on a 7-vertex sample") {
    // is_member(ptolemaic) cross-asserts internally; this sweep would throw
    // on any disagreement
    long count = 0;
    scan_graphs(
        7,
        [&](const Graph& g) {
            if (!is_connected(g)) return;
            count += is_member(g, GraphClass::ptolemaic);
        },
        7);
    CHECK(count > 0);
}

TEST_CASE("canonical form basics") {
    Graph p1 = path_graph(3);
    Graph p2 = from_edges(3, {{0, 2}, {1, 2}});
    CHECK(canonical_form(p1) == canonical_form(p2));
    CHECK(canonical_form(p1) != canonical_form(complete_graph(3)));
    CHECK(canonical_form(Graph(1)).size() == 1);
    CHECK_THROWS_AS(canonical_form(Graph(10)), std::length_error);
}

TEST_CASE("distinct canonical forms count unlabeled graphs") {
    const long expected[] = {0, 1, 1, 2, 6, 21, 112};  // connected, 1..6 vertices
    for (int n = 4; n <= 6; ++n) {
        std::set<std::string> forms;
        scan_graphs(n, [&](const Graph& g) {
            if (is_connected(g)) forms.insert(canonical_form(g));
        });
        CAPTURE(n);
        CHECK(static_cast<long>(forms.size()) == expected[n]);
    }
}

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937 rng(20240817);
    scan_graphs(
        6,
        [&](const Graph& g) {
            std::vector<int> perm(6);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            REQUIRE(canonical_form(g) == canonical_form(relabel(g, perm)));
        },
        101);
}

TEST_CASE("canonical graph realizes the canonical form") {
    Graph g = from_edges(5, {{0, 3}, {3, 1}, {1, 4}, {4, 2}});
    Graph c = canonical_graph(g);
    CHECK(canonical_form(c) == canonical_form(g));
    // packing c's own adjacency must reproduce the form bytes
    std::string form = canonical_form(g);
    std::string direct(1, static_cast<char>(5));
    int acc = 0, nbits = 0;
    for (int j = 1; j < 5; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (c.edge(i, j) ? 1 : 0);
            if (++nbits == 8) {
                direct.push_back(static_cast<char>(acc));
                acc = nbits = 0;
            }
        }
    if (nbits) direct.push_back(static_cast<char>(acc << (8 - nbits)));
    CHECK(direct == form);
}

TEST_CASE("graph6 codec") {
    CHECK(to_graph6(complete_graph(3)) == "Bw");
    CHECK(to_graph6(path_graph(3)) == "Bg");
    CHECK(from_graph6("Bw") == complete_graph(3));
    CHECK(from_graph6("Bg") == path_graph(3));
    scan_graphs(5, [](const Graph& g) { REQUIRE(from_graph6(to_graph6(g)) == g); });
    CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6("B"), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6(std::string(1, char(20))), std::invalid_argument);
}

TEST_CASE("edge list json codec") {
    Graph g = bowtie_graph();
    auto j = graph_to_json(g);
    CHECK(j.at("n") == 5);
    CHECK(graph_from_json(j) == g);
    CHECK_THROWS_AS(graph_from_json(nlohmann::json{{"n", 2}, {"edges", {{0, 0}}}}),
                    std::invalid_argument);
}

TEST_CASE("relabel rejects wrong-size permutations") {
    CHECK_THROWS_AS(relabel(Graph(3), {0, 1}), std::invalid_argument);
}
