#include "cospec/verify.hpp"

#include <algorithm>

#include "cospec/graph6.hpp"
#include "cospec/search.hpp"

namespace cospec {

CospectralVerdict cospectral(const Graph& g1, const Graph& g2, const MatrixKind& kind) {
    CospectralVerdict v;
    v.kind = kind;
    v.charpoly_1 = charpoly(build_matrix(g1, kind));
    v.charpoly_2 = charpoly(build_matrix(g2, kind));
    v.equal = (v.charpoly_1 == v.charpoly_2);
    return v;
}

CospectralVerdict verify_coalesced_cospectral(const Graph& g1, const Graph& g2,
                                              const Partition& partition,
                                              const std::vector<RootedGraph>& attachments,
                                              const MatrixKind& kind) {
    CoalescingSpec s1{g1, partition, attachments};
    CoalescingSpec s2{g2, partition, attachments};
    return cospectral(coalesce(s1).graph, coalesce(s2).graph, kind);
}

ConjectureCheckReport conjecture_counterexample_check(const Graph& g1, const Graph& g2,
                                                      int max_h_vertices) {
    ConjectureCheckReport rep;
    Partition all1 = Partition::single_class(g1.order());
    for (const RootedGraph& h : all_rooted_connected(max_h_vertices)) {
        if (h.graph.order() == 1) continue;  // K1 never changes the graphs
        ++rep.candidates_tried;
        CospectralVerdict v =
            verify_coalesced_cospectral(g1, g2, all1, {h}, MatrixKind::distance());
        if (!v.equal) {
            rep.found = true;
            rep.breaking_h = h;
            rep.breaking_h_g6 = graph6::encode(h.graph);
            rep.breaking_root = h.root;
            return rep;
        }
    }
    return rep;
}

namespace {

// sums[k][l] = sum of adjacency charpolys of induced subgraphs on S u T
// over all S in v1 with |S| = k and T in v2 with |T| = l.
void accumulate_induced_polys(const ExactMatrix& adj, const std::vector<int>& v1,
                              const std::vector<int>& v2, std::vector<std::vector<Poly>>& sums) {
    size_t k1 = v1.size(), k2 = v2.size();
    sums.assign(k1 + 1, std::vector<Poly>(k2 + 1));
    std::vector<int> s1, s2;
    // Iterate subsets by bitmask; sizes here are tiny (<= 2^n ops).
    for (uint32_t m1 = 0; m1 < (1u << k1); ++m1) {
        s1.clear();
        for (size_t b = 0; b < k1; ++b)
            if ((m1 >> b) & 1) s1.push_back(v1[b]);
        for (uint32_t m2 = 0; m2 < (1u << k2); ++m2) {
            s2.clear();
            for (size_t b = 0; b < k2; ++b)
                if ((m2 >> b) & 1) s2.push_back(v2[b]);
            std::vector<int> verts = s1;
            verts.insert(verts.end(), s2.begin(), s2.end());
            std::sort(verts.begin(), verts.end());
            Poly p = charpoly(adj.submatrix(verts, verts));
            Poly& acc = sums[s1.size()][s2.size()];
            if (acc.empty()) {
                acc = std::move(p);
            } else {
                for (size_t i = 0; i < p.size(); ++i) acc[i] += p[i];
            }
        }
    }
}

}  // namespace

bool butler_condition(const Graph& g1, const Graph& g2, const std::vector<int>& v1,
                      const std::vector<int>& v2) {
    if (g1.order() != g2.order()) throw ShapeError("graphs must share a vertex count");
    Partition check({v1, v2});
    check.validate(g1.order());
    if (v1.size() + v2.size() > 24) throw Error("graph too large for subset enumeration");

    ExactMatrix a1 = build_matrix(g1, MatrixKind::adjacency());
    ExactMatrix a2 = build_matrix(g2, MatrixKind::adjacency());
    std::vector<std::vector<Poly>> s1, s2;
    accumulate_induced_polys(a1, v1, v2, s1);
    accumulate_induced_polys(a2, v1, v2, s2);
    return s1 == s2;
}

std::optional<DistanceFunction> find_breaking_ftable(const Graph& g1, const Graph& g2,
                                                     int max_value) {
    DistanceTable d1 = all_pairs_distances(g1);
    DistanceTable d2 = all_pairs_distances(g2);
    int d_max = std::max(d1.diameter(), d2.diameter());
    std::vector<int> table(static_cast<size_t>(d_max) + 1, 0);
    for (;;) {
        std::vector<Rat> values(table.begin(), table.end());
        DistanceFunction f = df_table(std::move(values));
        MatrixKind kind = MatrixKind::generalized(f);
        if (!cospectral(g1, g2, kind).equal) return f;
        // next table in lexicographic order, f(0) most significant
        int pos = d_max;
        while (pos >= 0 && table[static_cast<size_t>(pos)] == max_value)
            table[static_cast<size_t>(pos--)] = 0;
        if (pos < 0) return std::nullopt;
        ++table[static_cast<size_t>(pos)];
    }
}

bool shift_lemma_oracle(const CoalescingSpec& spec) {
    CoalesceResult res = coalesce(spec);
    DistanceTable bfs = all_pairs_distances(res.graph);
    if (!bfs.all_finite()) throw NotConnected();
    ExactMatrix formula = shifted_block_matrix(spec, MatrixKind::distance());
    int n = res.graph.order();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (formula.at(u, v) != Rat(bfs.at(u, v))) return false;
    return true;
}

}  // namespace cospec
