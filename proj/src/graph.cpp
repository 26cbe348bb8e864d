#include "cospec/graph.hpp"

#include <algorithm>
#include <bit>

namespace cospec {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 0) throw Error("negative vertex count");
    bits_.assign(static_cast<size_t>(n_) * words_, 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw IndexError("edge endpoint out of range");
    if (u == v) throw Error("self-loops are not allowed");
    bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= uint64_t(1) << (v & 63);
    bits_[static_cast<size_t>(v) * words_ + (u >> 6)] |= uint64_t(1) << (u & 63);
}

int Graph::edge_count() const {
    int total = 0;
    for (uint64_t w : bits_) total += std::popcount(w);
    return total / 2;
}

int Graph::degree(int u) const {
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(row(u)[w]);
    return d;
}

std::vector<int> Graph::neighbors(int u) const {
    std::vector<int> out;
    for (int w = 0; w < words_; ++w) {
        uint64_t bitsw = row(u)[w];
        while (bitsw) {
            int b = std::countr_zero(bitsw);
            out.push_back(w * 64 + b);
            bitsw &= bitsw - 1;
        }
    }
    return out;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!edge(u, v)) g.add_edge(u, v);
    return g;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<uint64_t> seen(static_cast<size_t>(words_), 0);
    std::vector<uint64_t> frontier(static_cast<size_t>(words_), 0);
    seen[0] = frontier[0] = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<uint64_t> next(static_cast<size_t>(words_), 0);
        for (int u = 0; u < n_; ++u) {
            if (!((frontier[u >> 6] >> (u & 63)) & 1)) continue;
            for (int w = 0; w < words_; ++w) next[w] |= row(u)[w];
        }
        for (int w = 0; w < words_; ++w) {
            uint64_t fresh = next[w] & ~seen[w];
            if (fresh) grew = true;
            seen[w] |= fresh;
            frontier[w] = fresh;
        }
    }
    int total = 0;
    for (uint64_t w : seen) total += std::popcount(w);
    return total == n_;
}

RootedGraph::RootedGraph(Graph g, int r) : graph(std::move(g)), root(r) {
    if (root < 0 || root >= graph.order()) throw IndexError("root out of range");
}

RootedGraph RootedGraph::normalized() const {
    if (root == 0) return *this;
    int n = graph.order();
    // Root moves to index 0; the rest keep ascending original order.
    std::vector<int> order;
    order.push_back(root);
    for (int v = 0; v < n; ++v)
        if (v != root) order.push_back(v);
    std::vector<int> pos(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<size_t>(order[i])] = i;
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (graph.edge(u, v)) g.add_edge(pos[static_cast<size_t>(u)], pos[static_cast<size_t>(v)]);
    return RootedGraph(std::move(g), 0);
}

Partition::Partition(std::vector<std::vector<int>> cls) : classes(std::move(cls)) {
    for (auto& c : classes) std::sort(c.begin(), c.end());
}

int Partition::total_vertices() const {
    int total = 0;
    for (const auto& c : classes) total += static_cast<int>(c.size());
    return total;
}

void Partition::validate(int n) const {
    if (classes.empty()) throw InvalidPartition("partition needs at least one class");
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (const auto& c : classes) {
        if (c.empty()) throw InvalidPartition("empty partition class");
        for (int v : c) {
            if (v < 0 || v >= n) throw InvalidPartition("partition vertex out of range");
            if (seen[static_cast<size_t>(v)]) throw InvalidPartition("partition classes not disjoint");
            seen[static_cast<size_t>(v)] = true;
        }
    }
    for (bool b : seen)
        if (!b) throw InvalidPartition("partition does not cover all vertices");
}

Partition Partition::single_class(int n) {
    std::vector<int> all(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i;
    return Partition({all});
}

Partition Partition::singletons(int n) {
    std::vector<std::vector<int>> cls;
    for (int i = 0; i < n; ++i) cls.push_back({i});
    return Partition(std::move(cls));
}

void CoalescingSpec::validate() const {
    partition.validate(base.order());
    if (attachments.size() != partition.size())
        throw InvalidPartition("need exactly one attachment per partition class");
}

CoalesceResult coalesce(const CoalescingSpec& spec) {
    spec.validate();
    size_t l = spec.partition.size();

    std::vector<RootedGraph> hs;
    hs.reserve(l);
    for (const RootedGraph& h : spec.attachments) hs.push_back(h.normalized());

    CoalesceResult res;
    // Lexicographic (i, j, k) vertex order.
    std::vector<std::vector<std::vector<int>>> index(l);  // index[i][j][k] -> vertex
    int next = 0;
    for (size_t i = 0; i < l; ++i) {
        int nh = hs[i].graph.order();
        size_t csize = spec.partition.classes[i].size();
        index[i].assign(static_cast<size_t>(nh), std::vector<int>(csize));
        for (int j = 0; j < nh; ++j)
            for (size_t k = 0; k < csize; ++k) {
                index[i][static_cast<size_t>(j)][k] = next++;
                res.labels.push_back(
                    {static_cast<int>(i) + 1, j + 1, static_cast<int>(k) + 1});
            }
    }

    Graph g(next);
    // Base edges live between the j=1 layers.
    std::vector<std::pair<int, int>> where(static_cast<size_t>(spec.base.order()));
    for (size_t i = 0; i < l; ++i)
        for (size_t k = 0; k < spec.partition.classes[i].size(); ++k)
            where[static_cast<size_t>(spec.partition.classes[i][k])] = {static_cast<int>(i),
                                                                        static_cast<int>(k)};
    for (int u = 0; u < spec.base.order(); ++u)
        for (int v = u + 1; v < spec.base.order(); ++v)
            if (spec.base.edge(u, v)) {
                auto [iu, ku] = where[static_cast<size_t>(u)];
                auto [iv, kv] = where[static_cast<size_t>(v)];
                g.add_edge(index[static_cast<size_t>(iu)][0][static_cast<size_t>(ku)],
                           index[static_cast<size_t>(iv)][0][static_cast<size_t>(kv)]);
            }
    // Each glued copy of H_i carries H_i's edges (same i, same k).
    for (size_t i = 0; i < l; ++i) {
        const Graph& h = hs[i].graph;
        for (int ju = 0; ju < h.order(); ++ju)
            for (int jv = ju + 1; jv < h.order(); ++jv)
                if (h.edge(ju, jv))
                    for (size_t k = 0; k < spec.partition.classes[i].size(); ++k)
                        g.add_edge(index[i][static_cast<size_t>(ju)][k],
                                   index[i][static_cast<size_t>(jv)][k]);
    }
    res.graph = std::move(g);
    return res;
}

bool DistanceTable::all_finite() const {
    for (int32_t v : d)
        if (v == kInfinite) return false;
    return true;
}

int DistanceTable::diameter() const {
    int32_t best = 0;
    for (int32_t v : d) {
        if (v == kInfinite) throw NotConnected();
        best = std::max(best, v);
    }
    return best;
}

DistanceTable all_pairs_distances(const Graph& g) {
    int n = g.order();
    int words = g.words_per_row();
    DistanceTable t;
    t.n = n;
    t.d.assign(static_cast<size_t>(n) * n, DistanceTable::kInfinite);
    std::vector<uint64_t> seen(static_cast<size_t>(words));
    std::vector<uint64_t> frontier(static_cast<size_t>(words));
    std::vector<uint64_t> next(static_cast<size_t>(words));
    for (int s = 0; s < n; ++s) {
        std::fill(seen.begin(), seen.end(), 0);
        std::fill(frontier.begin(), frontier.end(), 0);
        seen[s >> 6] = frontier[s >> 6] = uint64_t(1) << (s & 63);
        t.d[static_cast<size_t>(s) * n + s] = 0;
        int dist = 0;
        bool grew = true;
        while (grew) {
            grew = false;
            ++dist;
            std::fill(next.begin(), next.end(), 0);
            for (int u = 0; u < n; ++u) {
                if (!((frontier[u >> 6] >> (u & 63)) & 1)) continue;
                for (int w = 0; w < words; ++w) next[static_cast<size_t>(w)] |= g.row(u)[w];
            }
            for (int w = 0; w < words; ++w) {
                uint64_t fresh = next[static_cast<size_t>(w)] & ~seen[static_cast<size_t>(w)];
                frontier[static_cast<size_t>(w)] = fresh;
                if (!fresh) continue;
                grew = true;
                seen[static_cast<size_t>(w)] |= fresh;
                while (fresh) {
                    int v = w * 64 + std::countr_zero(fresh);
                    t.d[static_cast<size_t>(s) * n + v] = dist;
                    fresh &= fresh - 1;
                }
            }
        }
    }
    return t;
}

Graph distance_t_graph(const Graph& g, int t) {
    if (t < 0) throw Error("distance parameter must be nonnegative");
    if (!g.is_connected()) throw NotConnected();
    if (t == 1) return g;
    DistanceTable d = all_pairs_distances(g);
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (d.at(u, v) == t) out.add_edge(u, v);
    return out;
}

Graph union_distance_graphs(const Graph& g, const std::vector<int>& ts) {
    if (!g.is_connected()) throw NotConnected();
    for (int t : ts)
        if (t <= 0) throw Error("distance set must contain positive integers");
    DistanceTable d = all_pairs_distances(g);
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (std::find(ts.begin(), ts.end(), d.at(u, v)) != ts.end()) out.add_edge(u, v);
    return out;
}

}  // namespace cospec
