#include "cospec/matrices.hpp"

#include <algorithm>
#include <sstream>

namespace cospec {

DistanceFunction df_table(std::vector<Rat> values, std::string label) {
    if (values.empty()) throw Error("distance function table must define f(0)");
    return DistanceFunction{std::move(values), std::move(label)};
}

DistanceFunction df_identity(int d_max) {
    std::vector<Rat> v;
    for (int d = 0; d <= d_max; ++d) v.emplace_back(d);
    return DistanceFunction{std::move(v), "identity"};
}

DistanceFunction df_square(int d_max) {
    std::vector<Rat> v;
    for (int d = 0; d <= d_max; ++d) v.emplace_back(static_cast<long>(d) * d);
    return DistanceFunction{std::move(v), "square"};
}

DistanceFunction df_exponential(const Rat& base, int d_max) {
    std::vector<Rat> v;
    Rat p(1);
    for (int d = 0; d <= d_max; ++d) {
        v.push_back(p);
        p *= base;
    }
    return DistanceFunction{std::move(v), "exp:" + to_string(base)};
}

DistanceFunction df_indicator(const std::vector<int>& ds, int d_max) {
    std::vector<Rat> v(static_cast<size_t>(d_max) + 1, Rat(0));
    std::string label = "indicator:";
    for (size_t i = 0; i < ds.size(); ++i) {
        if (ds[i] < 0 || ds[i] > d_max) throw Error("indicator distance out of range");
        v[static_cast<size_t>(ds[i])] = 1;
        label += (i ? "," : "") + std::to_string(ds[i]);
    }
    return DistanceFunction{std::move(v), std::move(label)};
}

std::string MatrixKind::to_string() const {
    switch (tag) {
        case Tag::QLaplacian:
            if (q == 0) return "adjacency";
            return "qlap:" + cospec::to_string(q);
        case Tag::Distance:
            return "dist";
        case Tag::GeneralizedDistance: {
            if (!f.label.empty()) return "gendist:" + f.label;
            std::string s = "gendist:";
            for (size_t i = 0; i < f.values.size(); ++i)
                s += (i ? "," : "") + cospec::to_string(f.values[i]);
            return s;
        }
    }
    return "?";
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

MatrixKind parse_kind(const std::string& text, int d_max) {
    if (text == "dist" || text == "distance") return MatrixKind::distance();
    if (text == "adj" || text == "adjacency") return MatrixKind::adjacency();
    if (text.rfind("qlap:", 0) == 0) return MatrixKind::qlaplacian(rat_from_string(text.substr(5)));
    if (text == "lap") return MatrixKind::qlaplacian(-1);
    if (text == "siglap") return MatrixKind::qlaplacian(1);
    if (text.rfind("gendist:", 0) == 0) {
        std::string body = text.substr(8);
        auto need_dmax = [&]() {
            if (d_max < 0) throw Error("named distance family needs a diameter to expand against");
        };
        if (body == "identity") {
            need_dmax();
            return MatrixKind::generalized(df_identity(d_max));
        }
        if (body == "square") {
            need_dmax();
            return MatrixKind::generalized(df_square(d_max));
        }
        if (body.rfind("exp:", 0) == 0) {
            need_dmax();
            return MatrixKind::generalized(df_exponential(rat_from_string(body.substr(4)), d_max));
        }
        if (body.rfind("indicator:", 0) == 0) {
            need_dmax();
            std::vector<int> ds;
            for (const std::string& part : split(body.substr(10), ','))
                ds.push_back(std::stoi(part));
            return MatrixKind::generalized(df_indicator(ds, d_max));
        }
        std::vector<Rat> values;
        for (const std::string& part : split(body, ',')) values.push_back(rat_from_string(part));
        return MatrixKind::generalized(df_table(std::move(values)));
    }
    throw Error("unknown matrix kind: " + text);
}

ExactMatrix build_matrix(const Graph& g, const MatrixKind& kind) {
    int n = g.order();
    ExactMatrix m(n, n);
    switch (kind.tag) {
        case MatrixKind::Tag::QLaplacian:
            for (int u = 0; u < n; ++u) {
                m.at(u, u) = kind.q;
                m.at(u, u) *= g.degree(u);
                for (int v = u + 1; v < n; ++v)
                    if (g.edge(u, v)) m.at(u, v) = m.at(v, u) = 1;
            }
            return m;
        case MatrixKind::Tag::Distance: {
            DistanceTable d = all_pairs_distances(g);
            if (!d.all_finite()) throw NotConnected();
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) m.at(u, v) = d.at(u, v);
            return m;
        }
        case MatrixKind::Tag::GeneralizedDistance: {
            DistanceTable d = all_pairs_distances(g);
            if (!d.all_finite()) throw NotConnected();
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) m.at(u, v) = kind.f.at(d.at(u, v));
            return m;
        }
    }
    throw Error("unreachable");
}

ExactMatrix shifted_block_matrix(const CoalescingSpec& spec, const MatrixKind& kind) {
    spec.validate();
    size_t l = spec.partition.size();

    std::vector<RootedGraph> hs;
    std::vector<DistanceTable> hdist;
    hs.reserve(l);
    for (const RootedGraph& h : spec.attachments) hs.push_back(h.normalized());
    if (kind.distance_based()) {
        for (const RootedGraph& h : hs) {
            DistanceTable t = all_pairs_distances(h.graph);
            if (!t.all_finite()) throw NotConnected("attachment graph is not connected");
            hdist.push_back(std::move(t));
        }
    }

    // For D^f only the base distances are needed: in every block exactly one
    // A^(t) term survives per entry, at t = dist_base(u, v).
    DistanceTable base_dist;
    ExactMatrix base;
    if (kind.tag == MatrixKind::Tag::GeneralizedDistance) {
        base_dist = all_pairs_distances(spec.base);
        if (!base_dist.all_finite()) throw NotConnected();
    } else {
        base = build_matrix(spec.base, kind);
    }

    // Row/column layout of the coalesced matrix: blocks (i, j) in
    // lexicographic order, each block one column per class vertex.
    std::vector<int> block_offset;
    std::vector<std::pair<int, int>> block_ij;  // 0-based (i, j)
    int total = 0;
    for (size_t i = 0; i < l; ++i)
        for (int j = 0; j < hs[i].graph.order(); ++j) {
            block_offset.push_back(total);
            block_ij.emplace_back(static_cast<int>(i), j);
            total += static_cast<int>(spec.partition.classes[i].size());
        }

    // Base-matrix sub-blocks indexed by class pair.
    std::vector<std::vector<int>> base_rows(l);
    for (size_t i = 0; i < l; ++i) base_rows[i] = spec.partition.classes[i];

    ExactMatrix out(total, total);
    for (size_t b1 = 0; b1 < block_ij.size(); ++b1) {
        auto [i1, j1] = block_ij[b1];
        int n1 = static_cast<int>(spec.partition.classes[static_cast<size_t>(i1)].size());
        for (size_t b2 = 0; b2 < block_ij.size(); ++b2) {
            auto [i2, j2] = block_ij[b2];
            int n2 = static_cast<int>(spec.partition.classes[static_cast<size_t>(i2)].size());
            ExactMatrix blk(n1, n2);

            if (kind.tag == MatrixKind::Tag::QLaplacian) {
                const Graph& h1 = hs[static_cast<size_t>(i1)].graph;
                if (j1 == 0 && j2 == 0) {
                    blk = base.submatrix(base_rows[static_cast<size_t>(i1)],
                                         base_rows[static_cast<size_t>(i2)]);
                    if (i1 == i2) {
                        Rat shift = kind.q;
                        shift *= h1.degree(0);
                        for (int k = 0; k < n1; ++k) blk.at(k, k) += shift;
                    }
                } else if (i1 == i2 && j1 == j2) {
                    Rat diag = kind.q;
                    diag *= h1.degree(j1);
                    for (int k = 0; k < n1; ++k) blk.at(k, k) = diag;
                } else if (i1 == i2 && h1.edge(j1, j2)) {
                    for (int k = 0; k < n1; ++k) blk.at(k, k) = 1;
                }
                // else: zero block
            } else {
                // alpha = dist_{H_{i1}}(root, j1) + dist_{H_{i2}}(root, j2);
                // beta = dist_{H_{i1}}(j1, j2) (same class only).
                int alpha = hdist[static_cast<size_t>(i1)].at(0, j1) +
                            hdist[static_cast<size_t>(i2)].at(0, j2);
                if (kind.tag == MatrixKind::Tag::Distance) {
                    blk = base.submatrix(base_rows[static_cast<size_t>(i1)],
                                         base_rows[static_cast<size_t>(i2)]);
                    for (int r = 0; r < n1; ++r)
                        for (int c = 0; c < n2; ++c) blk.at(r, c) += alpha;
                    if (i1 == i2) {
                        int beta = hdist[static_cast<size_t>(i1)].at(j1, j2);
                        for (int k = 0; k < n1; ++k) blk.at(k, k) += beta - alpha;
                    }
                } else {
                    const auto& cls1 = spec.partition.classes[static_cast<size_t>(i1)];
                    const auto& cls2 = spec.partition.classes[static_cast<size_t>(i2)];
                    for (int r = 0; r < n1; ++r)
                        for (int c = 0; c < n2; ++c) {
                            if (i1 == i2 && r == c) {
                                int beta = hdist[static_cast<size_t>(i1)].at(j1, j2);
                                blk.at(r, c) = kind.f.at(beta);
                            } else {
                                int t = base_dist.at(cls1[static_cast<size_t>(r)],
                                                     cls2[static_cast<size_t>(c)]);
                                blk.at(r, c) = kind.f.at(t + alpha);
                            }
                        }
                }
            }

            for (int r = 0; r < n1; ++r)
                for (int c = 0; c < n2; ++c)
                    out.at(block_offset[b1] + r, block_offset[b2] + c) = blk.at(r, c);
        }
    }
    return out;
}

}  // namespace cospec
