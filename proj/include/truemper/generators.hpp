#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "truemper/class_solvers.hpp"
#include "truemper/graph.hpp"
#include "truemper/rings.hpp"

namespace truemper {

/// Seeded source with portable integer/real draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform on [lo, hi].
    int uniform(int lo, int hi);
    /// Uniform on [0, 1).
    double real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    bool chance(double p) { return real() < p; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) std::swap(v[i], v[uniform(0, i)]);
    }

private:
    std::mt19937_64 engine_;
};

Graph cycle_graph(int k);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph edgeless_graph(int n);
/// Vertices of b follow those of a.
Graph join(const Graph& a, const Graph& b);
Graph disjoint_union(const Graph& a, const Graph& b);
/// Vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);
Graph shuffle_labels(const Graph& g, Rng& rng);

struct RingSample {
    Graph graph;
    GoodPartition partition;
};

/// Parts occupy consecutive labels; edges between neighbouring parts form random staircases.
RingSample gen_ring(std::uint64_t seed, int k, std::span<const int> sizes);
Graph gen_hyperhole(int k, std::span<const int> sizes);
Graph gen_hyperantihole(int k, std::span<const int> sizes);
/// Each new vertex attaches to a random clique grown around a random earlier vertex.
Graph gen_chordal(std::uint64_t seed, int n, double density);
/// k part sizes, each at least 1, summing to at most `budget` (budget >= k).
std::vector<int> random_sizes(Rng& rng, int k, int budget, int max_part);

/// A graph of the class's basic family on at most max_n vertices.
Graph gen_basic(Rng& rng, GraphClass c, int max_n);
/// Basic graphs of the class glued along random cliques of size at most 3.
Graph gen_class_member(std::uint64_t seed, GraphClass c, int pieces, int max_n);

}  // namespace truemper
