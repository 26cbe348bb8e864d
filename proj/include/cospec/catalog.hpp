#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cospec/similarity.hpp"

namespace cospec {
namespace catalog {

// Bundled reference data for the reproduce scenarios: graph pairs, vertex
// partitions and explicit block similarity certificates. Partitions are
// stored 0-based in graph6 vertex order.

struct SimilarityScenario {
    std::string name;
    std::string g_first;
    std::string g_second;
    Partition partition;
    BlockSimilarity similarity;
    /// true: the certificate satisfies S M(second) = M(first) S; the
    /// involutory certificates work in both directions.
    bool maps_second_to_first = false;

    /// The similarity problem the certificate verifies against (kind D,
    /// SJ=JS), oriented per maps_second_to_first.
    SimilarityProblem printed_problem(const MatrixKind& kind, bool require_sjjs) const;
};

struct CoalescingScenario {
    CoalescingSpec spec;
    std::vector<std::vector<long>> expected_base_distance;       // 6 x 6
    std::vector<std::vector<long>> expected_coalesced_distance;  // 16 x 16
};

/// fig1: 6-vertex base with three attachments whose coalescing has a fully
/// worked 16 x 16 distance matrix.
CoalescingScenario fig1();

/// fig2: adjacency-cospectral 7-vertex pair where the two-class polynomial
/// condition holds but no conforming block-diagonal similarity exists.
struct ButlerScenario {
    std::string g_first;
    std::string g_second;
    std::vector<int> v1, v2;  // 0-based class vertex sets
    Partition partition;
};
ButlerScenario fig2();

SimilarityScenario mckay();        // fig3: 16-vertex tree pair, (1)+(1)+(1/53)[14x14]
SimilarityScenario heysse();       // fig4: 10-vertex pair, (1)+(1)+(1/7)[8x8]
SimilarityScenario three_class();  // 8-vertex pair GNKutO/GB}XV_, (1)+(1)+(1/2)[6x6]
/// The 4-class refinement {1},{2},{3,4,5},{6,7,8} of three_class() for which
/// no conforming similarity exists.
Partition three_class_four_way();

/// fig5: all 11 distance-cospectral pairs on seven vertices.
std::vector<std::pair<std::string, std::string>> seven_vertex_pairs();
/// The single pair not cospectral for every generalized distance matrix.
std::pair<std::string, std::string> seven_vertex_exception();
/// The common certificate (1)+(1)+(1)+(1/2)(J-2I) on {1},{2},{3},{4..7}.
SimilarityScenario seven_vertex_common(const std::string& g_first,
                                       const std::string& g_second);

SimilarityScenario unions_a();  // fig6: singleton-heavy certificate
SimilarityScenario unions_b();  // fig6: {1..7},{8} certificate

/// fig7: the 8 nine-vertex distance-cospectral pairs with no SJ=JS
/// similarity matrix.
std::vector<std::pair<std::string, std::string>> nine_vertex_negative_pairs();

SimilarityScenario generalized_distance();  // fig8: 11-vertex pair, simultaneous

}  // namespace catalog
}  // namespace cospec
