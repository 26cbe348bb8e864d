#include "cospec/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "cospec/graph6.hpp"

namespace cospec {

namespace {

uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

bool isomorphic(const Graph& g1, const Graph& g2) {
    int n = g1.order();
    if (n != g2.order() || g1.edge_count() != g2.edge_count()) return false;
    if (n == 0) return true;

    std::vector<int> d1(static_cast<size_t>(n)), d2(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        d1[static_cast<size_t>(v)] = g1.degree(v);
        d2[static_cast<size_t>(v)] = g2.degree(v);
    }
    {
        std::vector<int> s1 = d1, s2 = d2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return false;
    }

    // Map vertices of g1 in descending-degree order; backtracking with
    // adjacency consistency against already-mapped vertices. Exhaustive, so
    // a negative answer is certified.
    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return d1[static_cast<size_t>(a)] > d1[static_cast<size_t>(b)]; });

    std::vector<int> map(static_cast<size_t>(n), -1);
    std::vector<bool> used(static_cast<size_t>(n), false);

    auto backtrack = [&](auto&& self, int depth) -> bool {
        if (depth == n) return true;
        int u = order[static_cast<size_t>(depth)];
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<size_t>(w)]) continue;
            if (d1[static_cast<size_t>(u)] != d2[static_cast<size_t>(w)]) continue;
            bool ok = true;
            for (int i = 0; i < depth; ++i) {
                int x = order[static_cast<size_t>(i)];
                if (g1.edge(u, x) != g2.edge(w, map[static_cast<size_t>(x)])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[static_cast<size_t>(u)] = w;
            used[static_cast<size_t>(w)] = true;
            if (self(self, depth + 1)) return true;
            used[static_cast<size_t>(w)] = false;
            map[static_cast<size_t>(u)] = -1;
        }
        return false;
    };
    return backtrack(backtrack, 0);
}

namespace {

// Compact handling for graphs on <= 12 vertices: adjacency rows as bit
// masks, edge sets as a single mask over upper-triangle pairs in graph6
// bit order (column by column).
struct SmallGraph {
    int n = 0;
    std::array<uint16_t, 12> adj{};

    static int pair_index(int i, int j) {  // i < j
        return j * (j - 1) / 2 + i;
    }

    static SmallGraph from_mask(int n, uint64_t mask) {
        SmallGraph g;
        g.n = n;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if ((mask >> pair_index(i, j)) & 1) {
                    g.adj[static_cast<size_t>(i)] |= uint16_t(1) << j;
                    g.adj[static_cast<size_t>(j)] |= uint16_t(1) << i;
                }
        return g;
    }

    bool connected() const {
        if (n <= 1) return true;
        uint16_t seen = 1, frontier = 1;
        while (frontier) {
            uint16_t next = 0;
            for (int v = 0; v < n; ++v)
                if ((frontier >> v) & 1) next |= adj[static_cast<size_t>(v)];
            frontier = next & static_cast<uint16_t>(~seen);
            seen |= frontier;
        }
        return seen == (uint16_t(1) << n) - 1;
    }

    // Distance matrix; requires connectivity.
    void distances(int32_t* d) const {
        for (int s = 0; s < n; ++s) {
            uint16_t seen = uint16_t(1) << s;
            uint16_t frontier = seen;
            d[s * n + s] = 0;
            int dist = 0;
            while (frontier) {
                ++dist;
                uint16_t next = 0;
                for (int v = 0; v < n; ++v)
                    if ((frontier >> v) & 1) next |= adj[static_cast<size_t>(v)];
                frontier = next & static_cast<uint16_t>(~seen);
                seen |= frontier;
                for (int v = 0; v < n; ++v)
                    if ((frontier >> v) & 1) d[s * n + v] = dist;
            }
        }
    }
};

// Division-free charpoly over __int128; exact for distance matrices up to
// n = 9 (intermediates stay far below the 128-bit range). Returns false if a
// final coefficient does not fit in 64 bits.
bool charpoly_small(const int32_t* m, int n, long long* out) {
    __int128 c[13], t[14], v[12], vn[12], next[13];
    int clen = 1;
    c[0] = 1;
    for (int k = 1; k <= n; ++k) {
        auto entry = [&](int r, int cc) -> __int128 { return m[r * n + cc]; };
        int tlen = 0;
        t[tlen++] = 1;
        t[tlen++] = -entry(k - 1, k - 1);
        for (int i = 0; i < k - 1; ++i) v[i] = entry(i, k - 1);
        for (int j = 0; j < k - 1; ++j) {
            __int128 dot = 0;
            for (int i = 0; i < k - 1; ++i) dot += entry(k - 1, i) * v[i];
            t[tlen++] = -dot;
            if (j < k - 2) {
                for (int r = 0; r < k - 1; ++r) {
                    __int128 acc = 0;
                    for (int i = 0; i < k - 1; ++i) acc += entry(r, i) * v[i];
                    vn[r] = acc;
                }
                std::copy(vn, vn + (k - 1), v);
            }
        }
        for (int i = 0; i <= k; ++i) {
            __int128 acc = 0;
            int jmax = std::min(i, tlen - 1);
            for (int j = 0; j <= jmax; ++j)
                if (i - j < clen) acc += t[j] * c[i - j];
            next[i] = acc;
        }
        std::copy(next, next + (k + 1), c);
        clen = k + 1;
    }
    for (int i = 0; i <= n; ++i) {
        long long low = static_cast<long long>(c[n - i]);
        if (static_cast<__int128>(low) != c[n - i]) return false;
        out[i] = low;  // ascending degree
    }
    return true;
}

}  // namespace

std::vector<RootedGraph> all_rooted_connected(int max_n) {
    if (max_n < 1 || max_n > 6) throw Error("rooted enumeration supported for 1..6 vertices");
    struct Entry {
        int n;
        int edges;
        std::string g6;
        Graph graph;
    };
    std::vector<Entry> canon;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<int> perm(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
        std::vector<std::vector<int>> perms;
        do {
            perms.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));

        int bits = n * (n - 1) / 2;
        std::vector<bool> seen(size_t(1) << bits, false);
        for (uint64_t mask = 0; mask < (uint64_t(1) << bits); ++mask) {
            if (seen[mask]) continue;
            SmallGraph g = SmallGraph::from_mask(n, mask);
            if (!g.connected()) continue;
            // Mark the whole relabeling orbit; mask itself is the minimum.
            uint64_t canonical = mask;
            for (const auto& p : perms) {
                uint64_t pm = 0;
                for (int j = 1; j < n; ++j)
                    for (int i = 0; i < j; ++i)
                        if ((mask >> SmallGraph::pair_index(i, j)) & 1) {
                            int pi = p[static_cast<size_t>(i)], pj = p[static_cast<size_t>(j)];
                            pm |= uint64_t(1) << SmallGraph::pair_index(std::min(pi, pj),
                                                                        std::max(pi, pj));
                        }
                seen[pm] = true;
                canonical = std::min(canonical, pm);
            }
            Graph graph(n);
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i)
                    if ((canonical >> SmallGraph::pair_index(i, j)) & 1) graph.add_edge(i, j);
            canon.push_back({n, graph.edge_count(), graph6::encode(graph), std::move(graph)});
        }
    }
    std::sort(canon.begin(), canon.end(), [](const Entry& a, const Entry& b) {
        if (a.n != b.n) return a.n < b.n;
        if (a.edges != b.edges) return a.edges < b.edges;
        return a.g6 < b.g6;
    });
    std::vector<RootedGraph> out;
    for (const Entry& e : canon)
        for (int root = 0; root < e.n; ++root) out.emplace_back(e.graph, root);
    return out;
}

ConnectedEnumerator::ConnectedEnumerator(int n) : n_(n) {
    if (n < 1) throw Error("vertex count must be positive");
    if (n > 8)
        throw UseExternalFile("labeled enumeration is limited to n <= 8; "
                              "stream an externally generated graph6 file instead");
    end_ = uint64_t(1) << (n * (n - 1) / 2);
}

std::optional<Graph> ConnectedEnumerator::next() {
    while (mask_ < end_) {
        SmallGraph g = SmallGraph::from_mask(n_, mask_);
        uint64_t mask = mask_++;
        if (!g.connected()) continue;
        Graph out(n_);
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i)
                if ((mask >> SmallGraph::pair_index(i, j)) & 1) out.add_edge(i, j);
        ++count_;
        return out;
    }
    return std::nullopt;
}

std::optional<std::vector<long long>> distance_charpoly_int64(const Graph& g) {
    int n = g.order();
    if (n > 9) throw Error("fixed-width distance charpoly is limited to n <= 9");
    DistanceTable t = all_pairs_distances(g);
    if (!t.all_finite()) throw NotConnected();
    int32_t dist[81];
    for (int i = 0; i < n * n; ++i) dist[i] = t.d[static_cast<size_t>(i)];
    std::vector<long long> out(static_cast<size_t>(n) + 1);
    if (!charpoly_small(dist, n, out.data())) return std::nullopt;
    return out;
}

namespace {

// Characteristic polynomial key: 64-bit pre-hash routes to a bucket, the
// exact coefficient vector confirms membership.
struct PolyKey {
    bool small = false;
    std::vector<long long> ints;  // ascending, used when small
    Poly exact;                   // used otherwise
    uint64_t hash = 0;

    bool operator==(const PolyKey& o) const {
        if (small != o.small) return false;
        return small ? ints == o.ints : exact == o.exact;
    }
};

PolyKey poly_key_for(const Graph& g, const MatrixKind& kind) {
    PolyKey key;
    int n = g.order();
    if (kind.tag == MatrixKind::Tag::Distance && n <= 9) {
        if (auto ints = distance_charpoly_int64(g)) {
            key.ints = std::move(*ints);
            key.small = true;
            uint64_t h = mix64(static_cast<uint64_t>(n) + 0x51ed);
            for (long long v : key.ints) h = mix64(h ^ static_cast<uint64_t>(v));
            key.hash = h;
            return key;
        }
    }
    key.exact = charpoly(build_matrix(g, kind));
    uint64_t h = mix64(static_cast<uint64_t>(n) + 0x51ed);
    for (const Rat& c : key.exact) {
        h = mix64(h ^ std::hash<std::string>{}(to_string(c)));
    }
    key.hash = h;
    return key;
}

struct Rep {
    uint64_t input_index;
    std::string g6;
    Graph graph;
};

struct Group {
    PolyKey key;
    std::vector<Rep> reps;
};

using GroupTable = std::unordered_map<uint64_t, std::vector<Group>>;

// Inserts a representative, deduplicating isomorphic copies; keeps the
// smallest input index per isomorphism class.
void insert_rep(GroupTable& table, PolyKey key, Rep rep) {
    auto& bucket = table[key.hash];
    for (Group& g : bucket) {
        if (!(g.key == key)) continue;
        for (Rep& existing : g.reps) {
            if (isomorphic(existing.graph, rep.graph)) {
                if (rep.input_index < existing.input_index) existing = std::move(rep);
                return;
            }
        }
        g.reps.push_back(std::move(rep));
        return;
    }
    bucket.push_back(Group{std::move(key), {std::move(rep)}});
}

}  // namespace

CensusReport mine_cospectral(GraphSource source, const MatrixKind& kind, const MineOptions& opts) {
    int workers = std::max(1, opts.workers);

    std::mutex source_mu;
    uint64_t input_counter = 0;
    int common_n = -2;  // -2 unset, -1 mixed
    auto pull = [&](std::vector<std::pair<uint64_t, Graph>>& batch) {
        batch.clear();
        std::lock_guard<std::mutex> lock(source_mu);
        for (int i = 0; i < 256; ++i) {
            std::optional<Graph> g = source();
            if (!g) break;
            if (common_n == -2)
                common_n = g->order();
            else if (common_n >= 0 && common_n != g->order())
                common_n = -1;
            batch.emplace_back(input_counter++, std::move(*g));
        }
    };

    std::vector<GroupTable> tables(static_cast<size_t>(workers));
    std::vector<uint64_t> local_skips(static_cast<size_t>(workers), 0);
    auto work = [&](int w) {
        std::vector<std::pair<uint64_t, Graph>> batch;
        for (;;) {
            pull(batch);
            if (batch.empty()) return;
            for (auto& [idx, g] : batch) {
                if (kind.distance_based() && !g.is_connected()) {
                    ++local_skips[static_cast<size_t>(w)];
                    continue;
                }
                PolyKey key = poly_key_for(g, kind);
                std::string code = graph6::encode(g);
                insert_rep(tables[static_cast<size_t>(w)], std::move(key),
                           Rep{idx, std::move(code), std::move(g)});
            }
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    GroupTable merged = std::move(tables[0]);
    for (int w = 1; w < workers; ++w)
        for (auto& [hash, bucket] : tables[static_cast<size_t>(w)])
            for (Group& g : bucket)
                for (Rep& rep : g.reps) insert_rep(merged, g.key, std::move(rep));

    CensusReport report;
    report.n = (common_n == -2) ? -1 : common_n;
    report.kind = kind.to_string();
    report.graphs_read = input_counter;
    for (uint64_t s : local_skips) report.skipped_disconnected += s;

    for (auto& [hash, bucket] : merged)
        for (Group& g : bucket) {
            report.iso_classes += g.reps.size();
            if (g.reps.size() < 2) continue;
            std::sort(g.reps.begin(), g.reps.end(),
                      [](const Rep& a, const Rep& b) { return a.input_index < b.input_index; });
            for (size_t i = 0; i < g.reps.size(); ++i)
                for (size_t j = i + 1; j < g.reps.size(); ++j) {
                    CensusPair p{g.reps[i].g6, g.reps[j].g6};
                    if (p.second < p.first) std::swap(p.first, p.second);
                    report.pairs.push_back(std::move(p));
                }
        }
    std::sort(report.pairs.begin(), report.pairs.end(), [](const CensusPair& a, const CensusPair& b) {
        return std::tie(a.first, a.second) < std::tie(b.first, b.second);
    });
    report.pair_count = report.pairs.size();
    return report;
}

CensusReport classify_sjjs(const std::vector<std::pair<Graph, Graph>>& pairs,
                           const ClassifyOptions& opts) {
    CensusReport report;
    report.kind = MatrixKind::distance().to_string();
    report.pair_count = pairs.size();
    report.graphs_read = 2 * pairs.size();

    std::vector<char> negative(pairs.size(), 0);
    std::atomic<size_t> cursor{0};
    int workers = std::max(1, opts.workers);
    auto work = [&]() {
        for (;;) {
            size_t i = cursor.fetch_add(1);
            if (i >= pairs.size()) return;
            const auto& [g1, g2] = pairs[i];
            SimilarityProblem prob;
            prob.g1 = g1;
            prob.g2 = g2;
            prob.partition = Partition::single_class(g1.order());
            prob.kind = MatrixKind::distance();
            prob.constraints.require_sj_eq_js = true;
            FindResult res = find_block_similarity(prob, opts.seed + i, opts.trials,
                                                   opts.coeff_bound);
            negative[i] = res.found() ? 0 : 1;
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    for (size_t i = 0; i < pairs.size(); ++i) {
        CensusPair p{graph6::encode(pairs[i].first), graph6::encode(pairs[i].second)};
        report.pairs.push_back(p);
        if (negative[i]) report.sjjs_negative.push_back(p);
        if (report.n == -1 && i == 0) report.n = pairs[i].first.order();
    }
    return report;
}

}  // namespace cospec
