#include "luem/graph.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <sstream>

using namespace luem;

TEST_CASE("load remaps labels to dense ids in first-seen order") {
    std::istringstream in("0 1\n1 2\n2 0\n");
    auto load = load_edge_list(in);
    CHECK(load.graph.node_count() == 3);
    CHECK(load.graph.edge_count() == 3);
    for (node_t v = 0; v < 3; ++v) CHECK(load.graph.degree(v) == 2);
}

TEST_CASE("load drops self-loops and duplicate edges") {
    std::istringstream in("5 5\n5 6\n6 5\n");
    auto load = load_edge_list(in);
    CHECK(load.graph.node_count() == 2);
    CHECK(load.graph.edge_count() == 1);
    CHECK(load.self_loops_dropped == 1);
    CHECK(load.duplicate_edges_dropped == 1);
    CHECK(load.graph.label(0) == 5);
    CHECK(load.graph.label(1) == 6);
}

TEST_CASE("load accepts comments, blank lines and CRLF") {
    std::istringstream in("# header\r\n\r\n  # indented comment\n10 20\r\n20 30\n");
    auto load = load_edge_list(in);
    CHECK(load.graph.node_count() == 3);
    CHECK(load.graph.edge_count() == 2);
    CHECK(load.graph.node_of_label(30).has_value());
}

TEST_CASE("load rejects malformed input with the line number") {
    std::istringstream bad_token("0 1\n1 x\n");
    CHECK_THROWS_WITH_AS(load_edge_list(bad_token), "line 2: malformed token 'x'", parse_error);

    std::istringstream three_tokens("0 1 2\n");
    CHECK_THROWS_AS(load_edge_list(three_tokens), parse_error);

    std::istringstream one_token("7\n");
    CHECK_THROWS_AS(load_edge_list(one_token), parse_error);

    std::istringstream overflow("0 99999999999999999999999\n");
    CHECK_THROWS_AS(load_edge_list(overflow), parse_error);

    // the largest representable label is fine
    std::istringstream max_label("0 18446744073709551615\n");
    CHECK(load_edge_list(max_label).graph.label(1) == 18446744073709551615ull);
}

TEST_CASE("empty input is an empty graph, not an error") {
    std::istringstream in("");
    auto load = load_edge_list(in);
    CHECK(load.graph.node_count() == 0);
    CHECK(load.graph.edge_count() == 0);
}

TEST_CASE("edge list round trip preserves the adjacency structure") {
    Graph g = generate_synthetic(60, 2, 9);
    std::ostringstream out;
    write_edge_list(g, out);
    std::istringstream in(out.str());
    auto reload = load_edge_list(in);
    CHECK(reload.graph.node_count() == g.node_count());
    CHECK(reload.graph.edge_count() == g.edge_count());
    // labels survive, so compare neighbor label sets per label
    for (node_t v = 0; v < g.node_count(); ++v) {
        auto mapped = reload.graph.node_of_label(g.label(v));
        REQUIRE(mapped.has_value());
        std::vector<label_t> a, b;
        for (node_t u : g.neighbors(v)) a.push_back(g.label(u));
        for (node_t u : reload.graph.neighbors(*mapped)) b.push_back(reload.graph.label(u));
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
    }
}

TEST_CASE("r_neighbors truncates at the requested depth") {
    Graph p = fixtures::path(3);
    CHECK(r_neighbors(p, 0, 1).reached() == NodeSet({0, 1}));
    CHECK(r_neighbors(p, 0, 2).reached() == NodeSet({0, 1, 2}));
    CHECK(r_neighbors(fixtures::triangle(), 0, 1).reached() == NodeSet({0, 1, 2}));
    CHECK(r_neighbors(p, 1, 1).at(1) == 0);  // source at distance 0
    CHECK_THROWS_AS(r_neighbors(p, 9, 1), std::domain_error);
}

TEST_CASE("r_neighbors reached sets grow with the radius") {
    Graph g = fixtures::er_random(24, 0.12, 5);
    for (node_t v = 0; v < g.node_count(); v += 3) {
        auto narrow = r_neighbors(g, v, 1).reached();
        auto wide = r_neighbors(g, v, 3).reached();
        for (node_t u : narrow) CHECK(wide.contains(u));
    }
}

TEST_CASE("distance map levels step by one hop") {
    Graph g = fixtures::er_random(30, 0.1, 11);
    auto dist = r_neighbors(g, 0, 4);
    for (node_t v = 0; v < g.node_count(); ++v) {
        if (v == 0 || dist[v] == DistanceMap::unreached) continue;
        bool has_parent = false;
        for (node_t u : g.neighbors(v))
            has_parent |= dist[u] != DistanceMap::unreached && dist[u] == dist[v] - 1;
        CHECK(has_parent);
    }
}

TEST_CASE("induced subgraph keeps exactly the internal edges") {
    Graph tri = fixtures::triangle();
    auto sub = induced_subgraph(tri, NodeSet({0, 1}));
    CHECK(sub.graph.node_count() == 2);
    CHECK(sub.graph.edge_count() == 1);
    CHECK(sub.to_parent == std::vector<node_t>{0, 1});

    auto empty = induced_subgraph(tri, NodeSet{});
    CHECK(empty.graph.node_count() == 0);

    auto three_of_clique = induced_subgraph(fixtures::clique(4), NodeSet({0, 2, 3}));
    CHECK(three_of_clique.graph.edge_count() == 3);

    CHECK_THROWS_AS(induced_subgraph(tri, NodeSet({5})), std::domain_error);
}

TEST_CASE("induced subgraph stays symmetric and simple") {
    Graph g = fixtures::er_random(20, 0.2, 3);
    auto sub = induced_subgraph(g, NodeSet({0, 2, 3, 5, 7, 8, 11, 12, 17}));
    for (node_t v = 0; v < sub.graph.node_count(); ++v) {
        auto nb = sub.graph.neighbors(v);
        CHECK(std::is_sorted(nb.begin(), nb.end()));
        CHECK(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
        for (node_t u : nb) {
            CHECK(u != v);
            CHECK(sub.graph.has_edge(u, v));
        }
    }
}

TEST_CASE("connected component") {
    Graph two = fixtures::two_disjoint_triangles();
    CHECK(connected_component(two, 4) == NodeSet({3, 4, 5}));

    Graph with_isolated = Graph::from_edges(3, {{0, 1}});
    CHECK(connected_component(with_isolated, 2) == NodeSet({2}));

    Graph tri = fixtures::triangle();
    CHECK(connected_component(tri, 1) == NodeSet({0, 1, 2}));
    CHECK_THROWS_AS(connected_component(tri, 3), std::domain_error);
}

TEST_CASE("connected component is a fixed point of its members") {
    Graph g = fixtures::er_random(18, 0.09, 17);
    auto comp = connected_component(g, 0);
    for (node_t v : comp) CHECK(connected_component(g, v) == comp);
}

TEST_CASE("synthetic generator") {
    SUBCASE("m=1 yields a tree") {
        Graph g = generate_synthetic(5, 1, 7);
        CHECK(g.node_count() == 5);
        CHECK(g.edge_count() == 4);
        CHECK(connected_component(g, 0).size() == 5);
    }
    SUBCASE("edge count is fixed by the construction") {
        // C(4,2) clique edges + 3 per later node
        Graph g = generate_synthetic(100, 3, 1);
        CHECK(g.edge_count() == 6 + 3 * 96);
        for (node_t v = 0; v < g.node_count(); ++v) CHECK(g.degree(v) >= 3);
    }
    SUBCASE("same seed, same graph") {
        CHECK(generate_synthetic(200, 2, 42) == generate_synthetic(200, 2, 42));
    }
    SUBCASE("invalid sizes") {
        CHECK_THROWS_AS(generate_synthetic(3, 3, 0), std::domain_error);
        CHECK_THROWS_AS(generate_synthetic(4, 0, 0), std::domain_error);
    }
}
