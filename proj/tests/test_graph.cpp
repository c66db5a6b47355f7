#include <doctest.h>

#include <random>

#include "collabnet/graph.hpp"
#include "support/test_support.hpp"

using namespace collabnet;
using namespace testsupport;

TEST_CASE("build_snapshot collapses directed multi-edges") {
    std::vector<TemporalEdge> edges = {
        {0, "a", "b", Field::CC, "1"},
        {1, "b", "a", Field::CC, "1"},
        {2, "a", "b", Field::CC, "2"},
    };
    GraphSnapshot g = build_snapshot(edges, 0);
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count == 1);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 1);
}

TEST_CASE("build_snapshot path degrees") {
    std::vector<TemporalEdge> edges = {
        {0, "a", "b", Field::CC, "1"},
        {1, "b", "c", Field::CC, "1"},
    };
    GraphSnapshot g = build_snapshot(edges, 0);
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count == 2);
    CHECK(g.degree(1) == 2);  // "b"
}

TEST_CASE("empty edge list gives an empty snapshot") {
    GraphSnapshot g = build_snapshot({}, 7);
    CHECK(g.empty());
    CHECK(g.node_count() == 0);
    CHECK(g.window_start == 7);
}

TEST_CASE("bfs distances on a path") {
    GraphSnapshot g = graph_from_pairs(3, {{0, 1}, {1, 2}});
    auto d = bfs_distances(g, 0);
    CHECK(d == std::vector<std::uint32_t>{0, 1, 2});
}

TEST_CASE("bfs distances in a 5-node star") {
    GraphSnapshot g = graph_from_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    auto from_center = bfs_distances(g, 0);
    for (NodeIndex i = 1; i < 5; ++i) CHECK(from_center[i] == 1);
    auto from_leaf = bfs_distances(g, 1);
    CHECK(from_leaf[0] == 1);
    CHECK(from_leaf[2] == 2);
    CHECK(from_leaf[3] == 2);
    CHECK(from_leaf[4] == 2);
}

TEST_CASE("bfs marks unreachable nodes") {
    GraphSnapshot g = graph_from_pairs(4, {{0, 1}, {2, 3}});
    auto d = bfs_distances(g, 0);
    CHECK(d[2] == kUnreached);
    CHECK(d[3] == kUnreached);
}

TEST_CASE("lcc fraction of a {5,3} component graph") {
    GraphSnapshot g =
        graph_from_pairs(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {5, 6}, {6, 7}});
    ComponentDecomposition cd = connected_components(g);
    CHECK(cd.component_sizes.size() == 2);
    CHECK(cd.lcc_nodes.size() == 5);
    CHECK(cd.lcc_fraction == doctest::Approx(0.625).epsilon(1e-15));
}

TEST_CASE("connected graph has lcc fraction 1") {
    GraphSnapshot g = graph_from_pairs(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(connected_components(g).lcc_fraction == 1.0);
}

TEST_CASE("lcc size tie broken by smallest minimum node id") {
    // two 4-cycles; the one containing node 0 must win
    GraphSnapshot g = graph_from_pairs(
        8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
    ComponentDecomposition cd = connected_components(g);
    REQUIRE(cd.lcc_nodes.size() == 4);
    CHECK(cd.lcc_nodes[0] == 0);
}

TEST_CASE("induced subgraph extracts the LCC with recomputed degrees") {
    GraphSnapshot g =
        graph_from_pairs(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {5, 6}, {6, 7}});
    ComponentDecomposition cd = connected_components(g);
    GraphSnapshot lcc = induced_subgraph(g, cd.lcc_nodes);
    CHECK(lcc.node_count() == 5);
    CHECK(lcc.edge_count == 4);
    CHECK(lcc.degree(0) == 4);
}

TEST_CASE("induced subgraph identity and single-node cases") {
    GraphSnapshot g = graph_from_pairs(3, {{0, 1}, {1, 2}});
    std::vector<NodeIndex> all = {0, 1, 2};
    GraphSnapshot same = induced_subgraph(g, all);
    CHECK(same.node_count() == 3);
    CHECK(same.edge_count == 2);
    CHECK(same.adj == g.adj);

    std::vector<NodeIndex> one = {1};
    GraphSnapshot single = induced_subgraph(g, one);
    CHECK(single.node_count() == 1);
    CHECK(single.edge_count == 0);
}

TEST_CASE("induced subgraph rejects unknown nodes") {
    GraphSnapshot g = graph_from_pairs(2, {{0, 1}});
    std::vector<NodeIndex> bad = {0, 9};
    CHECK_THROWS(induced_subgraph(g, bad));
}

TEST_CASE("structural invariants on random graphs") {
    std::mt19937_64 rng(1234);
    for (int iter = 0; iter < 50; ++iter) {
        std::size_t n = 2 + rng() % 49;
        auto g = graph_from_pairs(n, random_connected_edges(rng, n, 0.1));
        std::size_t degree_sum = 0;
        for (NodeIndex u = 0; u < g.node_count(); ++u) {
            degree_sum += g.degree(u);
            for (NodeIndex v : g.adj[u]) {
                CHECK(v != u);
                CHECK(has_edge(g, v, u));  // symmetry
            }
        }
        CHECK(degree_sum == 2 * g.edge_count);
    }
}

TEST_CASE("bfs agrees with Floyd-Warshall on random connected graphs") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 30; ++iter) {
        std::size_t n = 2 + rng() % 49;
        auto g = graph_from_pairs(n, random_connected_edges(rng, n, 0.08));
        auto fw = floyd_warshall(g);
        for (NodeIndex s = 0; s < g.node_count(); ++s) {
            auto d = bfs_distances(g, s);
            for (NodeIndex j = 0; j < g.node_count(); ++j)
                CHECK(static_cast<int>(d[j]) == fw[s][j]);
        }
    }
}

TEST_CASE("components agree with a transitive-closure oracle on random graphs") {
    std::mt19937_64 rng(4321);
    for (int iter = 0; iter < 30; ++iter) {
        std::size_t n = 2 + rng() % 49;
        // possibly disconnected: random pairs only
        std::vector<std::pair<NodeIndex, NodeIndex>> edges;
        std::size_t m = 1 + rng() % (2 * n);
        for (std::size_t k = 0; k < m; ++k) {
            NodeIndex u = static_cast<NodeIndex>(rng() % n);
            NodeIndex v = static_cast<NodeIndex>(rng() % n);
            if (u != v) edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        if (edges.empty()) continue;
        auto g = graph_from_pairs(n, edges);
        auto oracle = components_oracle(g);
        ComponentDecomposition cd = connected_components(g);
        for (NodeIndex a = 0; a < g.node_count(); ++a)
            for (NodeIndex b = 0; b < g.node_count(); ++b)
                CHECK((cd.component_id[a] == cd.component_id[b]) == (oracle[a] == oracle[b]));

        // LCC extraction yields a connected graph
        GraphSnapshot lcc = induced_subgraph(g, cd.lcc_nodes);
        auto d = bfs_distances(lcc, 0);
        for (auto x : d) CHECK(x != kUnreached);
    }
}
