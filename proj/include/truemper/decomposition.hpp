#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "truemper/graph.hpp"

namespace truemper {

/// C is a clique, A and B are nonempty and anticomplete.
struct CliqueCutPartition {
    VertexSet a, b, c;
};

/// Minimal elimination ordering (MCS-M) with the higher neighbours in the fill graph.
struct MinimalTriangulation {
    std::vector<int> order;
    std::vector<VertexSet> madj;
};

MinimalTriangulation mcs_m(const Graph& g);

/// Some clique-cut-partition with C = N(A), or none if G has no clique cutset.
std::optional<CliqueCutPartition> find_clique_cut(const Graph& g);
/// As above, and additionally G[A ∪ C] has no clique cutset.
std::optional<CliqueCutPartition> find_extreme_clique_cut(const Graph& g);

struct TreeNode {
    int id = 0;
    int parent = -1;
    bool leaf = true;
    /// V(G^u).
    VertexSet vertices;
    /// The clique cutset V^u of an internal node; empty for leaves.
    VertexSet cutset;
    /// Internal nodes: {leaf child, remaining subtree}.
    std::vector<int> children;
};

/// Node 0 is the root; internal nodes form a spine ending in a leaf.
struct DecompositionTree {
    std::vector<TreeNode> nodes;

    std::vector<int> leaves() const;
    InducedSubgraph subgraph(const Graph& g, int node) const;
};

DecompositionTree build_tree(const Graph& g);

struct GluedGraph {
    Graph graph;
    /// Vertex of the result for each vertex of the second graph.
    std::vector<int> second;
};

/// Identify shared[i].first in g1 with shared[i].second in g2. Vertices of g1
/// keep their labels; the rest of g2 follows in increasing order.
GluedGraph glue(const Graph& g1, const Graph& g2, std::span<const std::pair<int, int>> shared);

using LeafColorer = std::function<std::optional<Coloring>(const Graph&)>;
using LeafSetSolver = std::function<std::optional<VertexSet>(const WeightedGraph&)>;

std::optional<Coloring> solve_coloring(const Graph& g, const LeafColorer& leaf);
std::optional<VertexSet> solve_mwc(const WeightedGraph& g, const LeafSetSolver& leaf);
std::optional<VertexSet> solve_mwss(const WeightedGraph& g, const LeafSetSolver& leaf);

/// Colors renamed to 1..k in order of first appearance.
Coloring normalize_colors(const Coloring& c);

}  // namespace truemper
