#include "cospec/random.hpp"

namespace cospec {

Graph random_graph(int n, double edge_prob, Rng& rng) {
    std::bernoulli_distribution coin(edge_prob);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

Graph random_connected_graph(int n, Rng& rng) {
    for (;;) {
        Graph g = random_graph(n, 0.5, rng);
        if (g.is_connected()) return g;
    }
}

Graph random_tree(int n, Rng& rng) {
    Graph g(n);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        g.add_edge(v, pick(rng));
    }
    return g;
}

RootedGraph random_rooted_connected(int max_n, Rng& rng) {
    std::uniform_int_distribution<int> size(1, max_n);
    int n = size(rng);
    Graph g = random_connected_graph(n, rng);
    std::uniform_int_distribution<int> pick(0, n - 1);
    return RootedGraph(std::move(g), pick(rng));
}

Partition random_partition(int n, int max_classes, Rng& rng) {
    std::uniform_int_distribution<int> count(1, std::min(n, max_classes));
    int l = count(rng);
    std::vector<std::vector<int>> cls(static_cast<size_t>(l));
    // Assign every vertex somewhere, then patch empty classes.
    std::uniform_int_distribution<int> pick(0, l - 1);
    for (int v = 0; v < n; ++v) cls[static_cast<size_t>(pick(rng))].push_back(v);
    for (int i = 0; i < l; ++i) {
        if (!cls[static_cast<size_t>(i)].empty()) continue;
        for (auto& other : cls)
            if (other.size() > 1) {
                cls[static_cast<size_t>(i)].push_back(other.back());
                other.pop_back();
                break;
            }
    }
    std::erase_if(cls, [](const auto& c) { return c.empty(); });
    return Partition(std::move(cls));
}

CoalescingSpec random_spec(int base_max, int h_max, Rng& rng) {
    std::uniform_int_distribution<int> size(2, base_max);
    int n = size(rng);
    CoalescingSpec spec;
    spec.base = random_connected_graph(n, rng);
    spec.partition = random_partition(n, 4, rng);
    for (size_t i = 0; i < spec.partition.size(); ++i)
        spec.attachments.push_back(random_rooted_connected(h_max, rng));
    return spec;
}

DistanceFunction random_ftable(int d_max, Rng& rng) {
    std::uniform_int_distribution<int> num(-4, 6);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<Rat> values;
    for (int d = 0; d <= d_max; ++d) values.push_back(make_rat(num(rng), den(rng)));
    return df_table(std::move(values), "");
}

}  // namespace cospec
