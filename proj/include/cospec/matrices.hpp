#pragma once

#include <string>

#include "cospec/graph.hpp"
#include "cospec/matrix.hpp"

namespace cospec {

/// Value table f(0), f(1), ..., f(d_max). Theorems only ever evaluate f at
/// finitely many points, so a table keeps inputs unambiguous; named families
/// (square, exponential, ...) expand to tables via the factories below.
struct DistanceFunction {
    std::vector<Rat> values;
    std::string label;

    const Rat& at(int d) const {
        if (d < 0 || static_cast<size_t>(d) >= values.size()) throw FUndefinedAtDistance(d);
        return values[static_cast<size_t>(d)];
    }
    int max_distance() const { return static_cast<int>(values.size()) - 1; }
};

DistanceFunction df_table(std::vector<Rat> values, std::string label = "");
DistanceFunction df_identity(int d_max);
DistanceFunction df_square(int d_max);
DistanceFunction df_exponential(const Rat& base, int d_max);
DistanceFunction df_indicator(const std::vector<int>& ds, int d_max);

/// Selects which matrix of a graph to build: L^(q) with rational q
/// (q=0 adjacency, q=1 signless Laplacian, q=-1 negative Laplacian),
/// the distance matrix D, or the generalized distance matrix D^f.
struct MatrixKind {
    enum class Tag { QLaplacian, Distance, GeneralizedDistance };

    Tag tag = Tag::Distance;
    Rat q;
    DistanceFunction f;

    static MatrixKind adjacency() { return qlaplacian(0); }
    static MatrixKind qlaplacian(Rat q_value) {
        MatrixKind k;
        k.tag = Tag::QLaplacian;
        k.q = std::move(q_value);
        return k;
    }
    static MatrixKind distance() {
        MatrixKind k;
        k.tag = Tag::Distance;
        return k;
    }
    static MatrixKind generalized(DistanceFunction fn) {
        MatrixKind k;
        k.tag = Tag::GeneralizedDistance;
        k.f = std::move(fn);
        return k;
    }

    bool distance_based() const { return tag != Tag::QLaplacian; }
    std::string to_string() const;
};

/// Parses the CLI kind syntax: "qlap:Q", "adj", "dist",
/// "gendist:v0,v1,..." and the sugared families "gendist:square",
/// "gendist:exp:Q", "gendist:indicator:2,3", "gendist:identity".
/// Sugar needs a diameter to expand against; d_max < 0 defers expansion and
/// is an error for sugared forms.
MatrixKind parse_kind(const std::string& text, int d_max = -1);

/// Symmetric n x n matrix per the entrywise definitions. Distance kinds
/// require a connected graph; D^f requires f defined up to diam(g).
ExactMatrix build_matrix(const Graph& g, const MatrixKind& kind);

/// The matrix of coalesce(spec) assembled block-by-block from the base
/// graph's matrix and the attachment distances, without touching the
/// coalesced graph: the executable form of the block-shift identities.
/// Equals build_matrix(coalesce(spec).graph, kind) entrywise.
ExactMatrix shifted_block_matrix(const CoalescingSpec& spec, const MatrixKind& kind);

}  // namespace cospec
