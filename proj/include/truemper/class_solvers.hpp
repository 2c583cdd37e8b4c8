#pragma once

#include <optional>
#include <string>
#include <vector>

#include "truemper/detectors.hpp"
#include "truemper/graph.hpp"
#include "truemper/rings.hpp"

namespace truemper {

enum class GraphClass { GUT, GU, GT, GUTCapFree };

std::string to_string(GraphClass c);
/// Accepts "gut", "gu", "gt", "gutcap".
std::optional<GraphClass> graph_class_from_string(const std::string& name);
/// Truemper configurations (and caps) excluded by the class.
std::vector<ConfigKind> forbidden_kinds(GraphClass c);

/// A leaf of the decomposition tree that is not a basic graph of the class.
struct LeafFailure {
    std::vector<int> leaf;
    std::vector<int> anticomponent;
    std::string reason;
};

struct Recognition {
    bool member = false;
    std::optional<Certificate> certificate;
    std::optional<LeafFailure> failure;
};

Recognition recognize_gut(const Graph& g);
Recognition recognize_gu(const Graph& g);
Recognition recognize_gt(const Graph& g);
Recognition recognize_gutcap(const Graph& g);
Recognition recognize(const Graph& g, GraphClass c);

enum class BuhKind { K1, K2bar, OddLongHole, EvenLongHole, PathForest };
std::string to_string(BuhKind k);

struct BuhPart {
    VertexSet vertices;
    BuhKind kind;
};

/// Anticomponents with their labels if G is an induced subgraph of a graph in B_U.
std::optional<std::vector<BuhPart>> recognize_bu_h(const Graph& g);

// Leaf solvers. B_U^h: anticomponents are K1, co-K2, long holes or path forests.
std::optional<Coloring> color_bu_h(const Graph& g);
std::optional<VertexSet> mwc_bu_h(const WeightedGraph& g);
std::optional<VertexSet> mwss_bu_h(const WeightedGraph& g);
// B_C^H: anticomponents are chordal or long hyperholes.
std::optional<Coloring> color_bch(const Graph& g);
std::optional<VertexSet> mwc_bch(const WeightedGraph& g);
std::optional<VertexSet> mwss_bch(const WeightedGraph& g);
// Graphs where every G \ N(u) is chordal.
std::optional<VertexSet> mwss_nonneighborhood_chordal(const WeightedGraph& g);

std::optional<Coloring> color_gu(const Graph& g);
std::optional<VertexSet> mwc_gu(const WeightedGraph& g);
std::optional<VertexSet> mwss_gu(const WeightedGraph& g);
std::optional<CliqueAndStable> mwc_mwss_gu(const WeightedGraph& g);

std::optional<VertexSet> mwc_gt(const WeightedGraph& g);
std::optional<VertexSet> mwss_gt(const WeightedGraph& g);

std::optional<Coloring> color_gutcap(const Graph& g);
std::optional<VertexSet> mwc_gutcap(const WeightedGraph& g);
std::optional<VertexSet> mwss_gutcap(const WeightedGraph& g);
std::optional<CliqueAndStable> mwc_mwss_gutcap(const WeightedGraph& g);

struct DoubleStarCutset {
    VertexSet cutset;
    int x = -1;
    int y = -1;
};

/// Cutset around the attachment edge of a cap. Empty result means the
/// construction failed, which cannot happen for graphs in GUT.
/// Throws std::invalid_argument if `cap` is not a valid cap of g.
std::optional<DoubleStarCutset> double_star_cutset_from_cap(const Graph& g, const Certificate& cap);

}  // namespace truemper
