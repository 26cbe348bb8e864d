#pragma once

#include <random>

#include "cospec/graph.hpp"
#include "cospec/matrices.hpp"

namespace cospec {

using Rng = std::mt19937_64;

Graph random_graph(int n, double edge_prob, Rng& rng);
Graph random_connected_graph(int n, Rng& rng);
Graph random_tree(int n, Rng& rng);
RootedGraph random_rooted_connected(int max_n, Rng& rng);

/// Random partition of 0..n-1 into 1..max_classes nonempty classes.
Partition random_partition(int n, int max_classes, Rng& rng);

/// Random coalescing spec: connected base on <= base_max vertices, random
/// partition, connected rooted attachments on <= h_max vertices.
CoalescingSpec random_spec(int base_max, int h_max, Rng& rng);

/// Random rational table defined on 0..d_max with small integer values.
DistanceFunction random_ftable(int d_max, Rng& rng);

}  // namespace cospec
