#pragma once

#include <span>
#include <utility>
#include <vector>

#include "truemper/vertex_set.hpp"

namespace truemper {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency.
class Graph {
public:
    explicit Graph(int n);
    static Graph from_edges(int n, std::span<const Edge> edges);

    int order() const { return n_; }
    int edge_count() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool adjacent(int u, int v) const { return adj_[u].contains(v); }

    const VertexSet& neighbors(int v) const { return adj_[v]; }
    VertexSet closed_neighborhood(int v) const {
        VertexSet s = adj_[v];
        s.insert(v);
        return s;
    }
    int degree(int v) const { return adj_[v].size(); }

    VertexSet vertices() const { return VertexSet::full(n_); }
    VertexSet empty_set() const { return VertexSet(n_); }
    /// Edges (u,v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_;
    std::vector<VertexSet> adj_;
};

struct WeightedGraph {
    Graph graph;
    std::vector<double> weights;

    WeightedGraph(Graph g, std::vector<double> w);
    /// Unit weights.
    explicit WeightedGraph(Graph g);
};

/// G[S] together with the map from its vertices back to G.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> labels;

    VertexSet lift(const VertexSet& local, int universe) const;
    std::vector<int> lift(const std::vector<int>& local) const;
};

/// Proper coloring with colors 1..count.
struct Coloring {
    std::vector<int> color;

    int count() const;
};

Graph complement(const Graph& g);
std::vector<VertexSet> components(const Graph& g);
/// Components of G[within].
std::vector<VertexSet> components(const Graph& g, const VertexSet& within);
std::vector<VertexSet> anticomponents(const Graph& g);
std::vector<VertexSet> anticomponents(const Graph& g, const VertexSet& within);
bool is_connected(const Graph& g);

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
WeightedGraph induced_subgraph(const WeightedGraph& g, const InducedSubgraph& sub);

bool dominates(const Graph& g, int u, int v);

struct TwinPartition {
    std::vector<std::vector<int>> parts;
    std::vector<int> part_of;
    Graph quotient;
};
TwinPartition true_twin_partition(const Graph& g);

bool alpha_at_most_2(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_stable(const Graph& g, const VertexSet& s);
bool is_complete_to(const Graph& g, int v, const VertexSet& s);
bool is_proper_coloring(const Graph& g, const Coloring& c);
/// G itself is an induced cycle on at least four vertices.
bool is_hole(const Graph& g);

double weight_of(const std::vector<double>& w, const VertexSet& s);

}  // namespace truemper
