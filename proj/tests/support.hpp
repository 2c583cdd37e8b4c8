#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "truemper/generators.hpp"
#include "truemper/graph.hpp"

namespace truemper::testing {

inline Graph make_graph(int n, std::initializer_list<Edge> edges) {
    std::vector<Edge> e(edges);
    return Graph::from_edges(n, e);
}

inline std::vector<Edge> all_pairs(int n) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    return pairs;
}

/// Labeled graph whose edge set is selected by the bits of `mask` over all_pairs(n).
inline Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    auto pairs = all_pairs(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
    return g;
}

inline Graph random_graph(Rng& rng, int n, double p) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p)) g.add_edge(u, v);
    return g;
}

inline std::vector<double> random_weights(Rng& rng, int n, int lo, int hi) {
    std::vector<double> w(n);
    for (auto& x : w) x = rng.uniform(lo, hi);
    return w;
}

inline Graph house() { return make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}}); }
inline Graph k23() { return make_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }
inline Graph wheel(int k) { return join(cycle_graph(k), complete_graph(1)); }

}  // namespace truemper::testing
