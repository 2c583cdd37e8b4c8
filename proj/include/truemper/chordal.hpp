#pragma once

#include <optional>
#include <span>
#include <vector>

#include "truemper/graph.hpp"

namespace truemper {

/// v_1..v_n; later neighbours of each v_i form a clique.
struct EliminationOrder {
    std::vector<int> order;
};

std::optional<EliminationOrder> simplicial_order(const Graph& g);
bool is_simplicial_order(const Graph& g, std::span<const int> order);
bool is_chordal(const Graph& g);

Coloring chordal_color(const Graph& g, const EliminationOrder& o);
VertexSet chordal_mwc(const WeightedGraph& g, const EliminationOrder& o);
VertexSet chordal_mwss(const WeightedGraph& g, const EliminationOrder& o);

}  // namespace truemper
