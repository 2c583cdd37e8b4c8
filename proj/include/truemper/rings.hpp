#pragma once

#include <optional>
#include <span>
#include <vector>

#include "truemper/graph.hpp"

namespace truemper {

/// Cyclic sequence of parts X_1..X_k. For rings each part is listed
/// u_1, u_2, ... with decreasing closed neighbourhoods.
struct GoodPartition {
    std::vector<std::vector<int>> parts;

    int length() const { return static_cast<int>(parts.size()); }
};

/// Throws std::invalid_argument if the parts do not partition V(G).
bool verify_good_partition(const Graph& g, const GoodPartition& p);
/// Each part is listed so that closed neighbourhoods decrease and N[u_1^i] = X_{i-1} ∪ X_i ∪ X_{i+1}.
bool has_nested_orderings(const Graph& g, const GoodPartition& p);

std::optional<GoodPartition> recognize_ring(const Graph& g);
std::optional<GoodPartition> recognize_hyperhole(const Graph& g);
std::optional<GoodPartition> recognize_hyperantihole(const Graph& g);

struct CycleColoring {
    std::vector<std::vector<int>> color_sets;
    int count = 0;
};

/// Optimal coloring of C_k where position i needs mult[i] colors.
CycleColoring weighted_cycle_color(int k, std::span<const int> mult);

std::optional<Coloring> hyperhole_color(const Graph& g);

struct CliqueAndStable {
    VertexSet clique;
    VertexSet stable;
};

std::optional<CliqueAndStable> hyperhole_mwc_mwss(const WeightedGraph& g);

}  // namespace truemper
