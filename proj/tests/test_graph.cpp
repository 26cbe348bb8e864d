#include <doctest.h>

#include <random>

#include "cospec/graph.hpp"
#include "cospec/random.hpp"

using namespace cospec;

namespace {

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

}  // namespace

TEST_CASE("graph basics") {
    Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.degree(1) == 2);
    CHECK(g.edge(0, 1));
    CHECK(g.edge(1, 0));
    CHECK(!g.edge(0, 3));
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
    CHECK(g.is_connected());
    CHECK(!Graph(2).is_connected());
    CHECK(Graph(1).is_connected());
    CHECK_THROWS_AS(g.add_edge(0, 0), Error);
    CHECK_THROWS_AS(g.add_edge(0, 7), IndexError);
    CHECK(g.complement().edge(0, 3));
    CHECK(!g.complement().edge(0, 1));
}

TEST_CASE("all_pairs_distances on paths and disconnected graphs") {
    DistanceTable d = all_pairs_distances(path(3));
    CHECK(d.at(0, 0) == 0);
    CHECK(d.at(0, 1) == 1);
    CHECK(d.at(0, 2) == 2);
    CHECK(d.at(2, 1) == 1);
    CHECK(d.all_finite());
    CHECK(d.diameter() == 2);

    DistanceTable single = all_pairs_distances(Graph(1));
    CHECK(single.at(0, 0) == 0);

    DistanceTable disc = all_pairs_distances(Graph(2));
    CHECK(disc.at(0, 1) == DistanceTable::kInfinite);
    CHECK(!disc.all_finite());
    CHECK_THROWS_AS(disc.diameter(), NotConnected);
}

TEST_CASE("distance table properties on random graphs") {
    Rng rng(4242);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_connected_graph(8, rng);
        DistanceTable d = all_pairs_distances(g);
        for (int u = 0; u < 8; ++u)
            for (int v = 0; v < 8; ++v) {
                CHECK(d.at(u, v) == d.at(v, u));
                CHECK((d.at(u, v) == 1) == g.edge(u, v));
                for (int w = 0; w < 8; ++w)
                    CHECK(d.at(u, v) <= d.at(u, w) + d.at(w, v));
            }
    }
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition(std::vector<std::vector<int>>{}).validate(3), InvalidPartition);
    CHECK_THROWS_AS(Partition({{0, 1}}).validate(3), InvalidPartition);
    CHECK_THROWS_AS(Partition({{0, 1}, {1, 2}}).validate(3), InvalidPartition);
    CHECK_THROWS_AS(Partition({{0, 1, 2, 3}}).validate(3), InvalidPartition);
    CHECK_NOTHROW(Partition({{2, 0}, {1}}).validate(3));
    // classes keep ascending vertex order
    CHECK(Partition({{2, 0}, {1}}).classes[0] == std::vector<int>{0, 2});
    CHECK(Partition::single_class(3).classes[0] == std::vector<int>{0, 1, 2});
    CHECK(Partition::singletons(2).size() == 2);
}

TEST_CASE("rooted graph normalization moves the root to index 0") {
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}});
    RootedGraph r(g, 2);
    RootedGraph n = r.normalized();
    CHECK(n.root == 0);
    // order [2, 0, 1]: edges (2,1) -> (0,2), (0,1) -> (1,2)
    CHECK(n.graph.edge(0, 2));
    CHECK(n.graph.edge(1, 2));
    CHECK(!n.graph.edge(0, 1));
    CHECK_THROWS_AS(RootedGraph(g, 5), IndexError);
}

TEST_CASE("coalescing identities") {
    Rng rng(99);
    RootedGraph k1(Graph(1), 0);
    for (int trial = 0; trial < 10; ++trial) {
        Graph base = random_connected_graph(6, rng);
        Partition part = random_partition(6, 3, rng);
        CoalescingSpec spec{base, part, std::vector<RootedGraph>(part.size(), k1)};
        CoalesceResult res = coalesce(spec);
        // K1 everywhere: same graph up to the induced class-order relabeling.
        REQUIRE(res.graph.order() == 6);
        std::vector<int> relabel(6);
        int pos = 0;
        for (const auto& cls : part.classes)
            for (int v : cls) relabel[static_cast<size_t>(v)] = pos++;
        for (int u = 0; u < 6; ++u)
            for (int v = 0; v < 6; ++v)
                CHECK(base.edge(u, v) ==
                      res.graph.edge(relabel[static_cast<size_t>(u)], relabel[static_cast<size_t>(v)]));
    }
}

TEST_CASE("coalescing the 2-vertex base with a pendant path") {
    // base = K2, one class holding both vertices, H = path on 2 vertices
    // rooted at an end: edges {0-1, 0-2, 1-3}.
    CoalescingSpec spec;
    spec.base = Graph::from_edges(2, {{0, 1}});
    spec.partition = Partition::single_class(2);
    spec.attachments = {RootedGraph(Graph::from_edges(2, {{0, 1}}), 0)};
    CoalesceResult res = coalesce(spec);
    REQUIRE(res.graph.order() == 4);
    CHECK(res.graph.edge_count() == 3);
    CHECK(res.graph.edge(0, 1));
    CHECK(res.graph.edge(0, 2));
    CHECK(res.graph.edge(1, 3));
    REQUIRE(res.labels.size() == 4);
    CHECK(res.labels[0] == VertexLabel{1, 1, 1});
    CHECK(res.labels[1] == VertexLabel{1, 1, 2});
    CHECK(res.labels[2] == VertexLabel{1, 2, 1});
    CHECK(res.labels[3] == VertexLabel{1, 2, 2});
}

TEST_CASE("coalesced vertex and edge counts follow the closed forms") {
    Rng rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        CoalescingSpec spec = random_spec(7, 4, rng);
        CoalesceResult res = coalesce(spec);
        int expect_v = spec.base.order();
        int expect_e = spec.base.edge_count();
        for (size_t i = 0; i < spec.partition.size(); ++i) {
            int ci = static_cast<int>(spec.partition.classes[i].size());
            expect_v += ci * (spec.attachments[i].graph.order() - 1);
            expect_e += ci * spec.attachments[i].graph.edge_count();
        }
        CHECK(res.graph.order() == expect_v);
        CHECK(res.graph.edge_count() == expect_e);
        CHECK(static_cast<int>(res.labels.size()) == expect_v);
    }
}

TEST_CASE("coalesce rejects invalid partitions") {
    CoalescingSpec spec;
    spec.base = path(3);
    spec.partition = Partition({{0, 1}});  // does not cover vertex 2
    spec.attachments = {RootedGraph(Graph(1), 0)};
    CHECK_THROWS_AS(coalesce(spec), InvalidPartition);

    spec.partition = Partition({{0, 1}, {2}});
    CHECK_THROWS_AS(coalesce(spec), InvalidPartition);  // one attachment missing
}

TEST_CASE("distance_t_graph") {
    Graph p3 = path(3);
    Graph d2 = distance_t_graph(p3, 2);
    CHECK(d2.edge_count() == 1);
    CHECK(d2.edge(0, 2));
    CHECK(distance_t_graph(p3, 1) == p3);
    CHECK(distance_t_graph(p3, 0).edge_count() == 0);
    CHECK_THROWS_AS(distance_t_graph(Graph(2), 1), NotConnected);
}

TEST_CASE("union_distance_graphs") {
    Graph p3 = path(3);
    Graph all = union_distance_graphs(p3, {1, 2});
    CHECK(all.edge_count() == 3);  // K3
    CHECK(union_distance_graphs(p3, {2}) == distance_t_graph(p3, 2));
    CHECK(union_distance_graphs(p3, {}).edge_count() == 0);
    CHECK_THROWS_AS(union_distance_graphs(Graph(2), {1}), NotConnected);
    CHECK_THROWS_AS(union_distance_graphs(p3, {0}), Error);

    // Union over {2..diam} is the complement of the graph.
    Rng rng(5150);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_connected_graph(8, rng);
        int diam = all_pairs_distances(g).diameter();
        std::vector<int> rest;
        for (int t = 2; t <= diam; ++t) rest.push_back(t);
        CHECK(union_distance_graphs(g, rest) == g.complement());
    }
}
