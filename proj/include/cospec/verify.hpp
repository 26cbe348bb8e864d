#pragma once

#include <optional>

#include "cospec/similarity.hpp"

namespace cospec {

struct CospectralVerdict {
    MatrixKind kind;
    bool equal = false;
    Poly charpoly_1;
    Poly charpoly_2;
};

/// Exact characteristic-polynomial comparison for the chosen matrix kind.
/// Unequal vertex counts simply compare unequal; distance kinds throw
/// NotConnected on disconnected input.
CospectralVerdict cospectral(const Graph& g1, const Graph& g2, const MatrixKind& kind);

/// Coalesces both graphs with the same partition/attachments and compares.
CospectralVerdict verify_coalesced_cospectral(const Graph& g1, const Graph& g2,
                                              const Partition& partition,
                                              const std::vector<RootedGraph>& attachments,
                                              const MatrixKind& kind);

struct ConjectureCheckReport {
    bool found = false;
    RootedGraph breaking_h;    // valid when found
    std::string breaking_h_g6;
    int breaking_root = 0;     // root in the reported canonical labeling
    int candidates_tried = 0;
};

/// Searches small connected rooted H (vertex count <= max_h_vertices, every
/// root choice, ordered by vertex count, edge count, graph6 code, root) for
/// one whose coalescing onto ALL vertices of both graphs breaks
/// distance-cospectrality. Reports the first hit or exhaustion.
ConjectureCheckReport conjecture_counterexample_check(const Graph& g1, const Graph& g2,
                                                      int max_h_vertices = 4);

/// The two-class polynomial criterion: for all (k,l), the sums of
/// characteristic polynomials of induced subgraphs on S u T with S in V1,
/// |S|=k, T in V2, |T|=l must agree between the graphs.
bool butler_condition(const Graph& g1, const Graph& g2,
                      const std::vector<int>& v1, const std::vector<int>& v2);

/// True iff BFS distances of coalesce(spec) match the block-shift formula
/// for every block pair.
bool shift_lemma_oracle(const CoalescingSpec& spec);

/// First table f(0..max_diam) with integer values in 0..max_value
/// (lexicographic order) on which the generalized distance matrices of the
/// two graphs stop being cospectral, if one exists.
std::optional<DistanceFunction> find_breaking_ftable(const Graph& g1, const Graph& g2,
                                                     int max_value = 3);

}  // namespace cospec
