#pragma once

#include <cstdint>
#include <vector>

#include "cospec/errors.hpp"

namespace cospec {

/// Simple undirected graph on vertices 0..n-1, adjacency stored as packed
/// bit rows. No self-loops; construction keeps the matrix symmetric.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int edge_count() const;
    int degree(int u) const;

    bool edge(int u, int v) const {
        return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    void add_edge(int u, int v);

    std::vector<int> neighbors(int u) const;
    const uint64_t* row(int u) const { return bits_.data() + static_cast<size_t>(u) * words_; }
    int words_per_row() const { return words_; }

    Graph complement() const;
    bool is_connected() const;

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_;
};

/// Graph plus a distinguished root vertex. normalized() relabels so the root
/// becomes vertex 0 with the remaining vertices in ascending original order.
struct RootedGraph {
    Graph graph;
    int root = 0;

    RootedGraph() = default;
    RootedGraph(Graph g, int r);
    RootedGraph normalized() const;
};

/// Ordered list of disjoint vertex classes covering 0..n-1. Vertices within
/// a class are kept in increasing label order (the position index k).
struct Partition {
    std::vector<std::vector<int>> classes;

    Partition() = default;
    explicit Partition(std::vector<std::vector<int>> cls);

    size_t size() const { return classes.size(); }
    int total_vertices() const;
    // Throws InvalidPartition unless classes are disjoint, nonempty and
    // cover 0..n-1 exactly.
    void validate(int n) const;

    static Partition single_class(int n);
    static Partition singletons(int n);
};

struct CoalescingSpec {
    Graph base;
    Partition partition;
    std::vector<RootedGraph> attachments;  // one per class; K1 allowed

    void validate() const;
};

/// (i, j, k), 1-based: vertex j of the copy of H_i glued onto the k-th
/// vertex of class V_i. Lexicographic (i, j, k) order is the row/column
/// order of every matrix of a coalesced graph.
struct VertexLabel {
    int class_index;
    int attach_vertex;
    int position;

    bool operator==(const VertexLabel&) const = default;
};

struct CoalesceResult {
    Graph graph;
    std::vector<VertexLabel> labels;
};

CoalesceResult coalesce(const CoalescingSpec& spec);

/// Shortest-path distances with kInfinite marking unreachable pairs.
struct DistanceTable {
    static constexpr int32_t kInfinite = -1;

    int n = 0;
    std::vector<int32_t> d;

    int32_t at(int u, int v) const { return d[static_cast<size_t>(u) * n + v]; }
    bool all_finite() const;
    int diameter() const;  // throws NotConnected if any pair unreachable
};

DistanceTable all_pairs_distances(const Graph& g);

/// Graph with edges exactly between vertices at distance t. t=1 returns g,
/// t=0 the empty graph. Throws NotConnected on disconnected input.
Graph distance_t_graph(const Graph& g, int t);

/// Edges between vertices whose distance lies in ts (positive distances).
Graph union_distance_graphs(const Graph& g, const std::vector<int>& ts);

}  // namespace cospec
