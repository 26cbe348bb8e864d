#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cospec/similarity.hpp"

namespace cospec {

/// Exhaustive backtracking isomorphism test (degree-pruned permutation
/// search). Exact for the small orders used here.
bool isomorphic(const Graph& g1, const Graph& g2);

/// All connected rooted graphs with up to max_n vertices, every root choice,
/// ordered by (vertex count, edge count, graph6 code of the canonical
/// representative, root index). Deterministic.
std::vector<RootedGraph> all_rooted_connected(int max_n);

/// Streams every connected LABELED graph on n vertices (all 2^(n(n-1)/2)
/// edge subsets, filtered). Throws UseExternalFile for n > 8.
class ConnectedEnumerator {
public:
    explicit ConnectedEnumerator(int n);
    std::optional<Graph> next();
    uint64_t yielded() const { return count_; }

private:
    int n_;
    uint64_t mask_ = 0;
    uint64_t end_ = 0;
    uint64_t count_ = 0;
};

/// Pulls graphs from any source; return std::nullopt at end of stream.
using GraphSource = std::function<std::optional<Graph>()>;

/// Census fast path: distance charpoly with fixed-width integer arithmetic,
/// exact for connected graphs on <= 9 vertices. nullopt if any coefficient
/// falls outside 64 bits (cannot happen at these sizes, checked anyway).
std::optional<std::vector<long long>> distance_charpoly_int64(const Graph& g);

struct CensusPair {
    std::string first;   // graph6 of first representative (input order)
    std::string second;
};

struct CensusReport {
    int n = -1;  // -1 when the stream mixes vertex counts
    std::string kind;
    uint64_t graphs_read = 0;
    uint64_t skipped_disconnected = 0;
    /// Distinct graphs up to isomorphism (charpoly groups refine isomorphism,
    /// so per-group deduplication counts classes exactly).
    size_t iso_classes = 0;
    size_t pair_count = 0;
    std::vector<CensusPair> pairs;          // sorted, members sorted within pair
    std::vector<CensusPair> sjjs_negative;  // filled by classify_sjjs
};

struct MineOptions {
    int workers = 1;
};

/// Groups graphs by exact characteristic polynomial (64-bit pre-hash, then
/// exact confirmation), removes isomorphic duplicates inside each group by
/// exhaustive permutation search, and emits every unordered pair of distinct
/// representatives sharing a polynomial.
CensusReport mine_cospectral(GraphSource source, const MatrixKind& kind,
                             const MineOptions& opts = {});

struct ClassifyOptions {
    uint64_t seed = 0;
    int trials = kDefaultTrials;
    long long coeff_bound = kDefaultCoeffBound;
    int workers = 1;
};

/// For each distance-cospectral pair, runs find_block_similarity with a
/// single full-size block under SJ=JS and splits the pairs into witnessed
/// and negative (NoSolutionSpace or AllSampledSingular).
CensusReport classify_sjjs(const std::vector<std::pair<Graph, Graph>>& pairs,
                           const ClassifyOptions& opts = {});

}  // namespace cospec
