#include "truemper/class_solvers.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "truemper/chordal.hpp"
#include "truemper/decomposition.hpp"

namespace truemper {

namespace {

constexpr ConfigKind kSmallObstructions[] = {ConfigKind::K23, ConfigKind::C6bar, ConfigKind::W54};

std::optional<Certificate> small_obstruction(const Graph& g) {
    for (ConfigKind k : kSmallObstructions)
        if (auto c = find_small_obstruction(g, k)) return c;
    return std::nullopt;
}

Recognition rejected(const Graph& g, LeafFailure failure) {
    return {false, small_obstruction(g), std::move(failure)};
}

Recognition rejected(Certificate c) { return {false, std::move(c), std::nullopt}; }

/// Runs `test` on every anticomponent of every leaf; the first failure wins.
template <class Test>
std::optional<LeafFailure> check_leaf_anticomponents(const Graph& g, Test test) {
    DecompositionTree tree = build_tree(g);
    for (int id : tree.leaves()) {
        InducedSubgraph leaf = tree.subgraph(g, id);
        for (const VertexSet& ac : anticomponents(leaf.graph)) {
            InducedSubgraph h = induced_subgraph(leaf.graph, ac);
            if (auto reason = test(h.graph)) {
                return LeafFailure{leaf.labels, leaf.lift(h.labels), *reason};
            }
        }
    }
    return std::nullopt;
}

bool is_path_forest(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 2) return false;
    return g.edge_count() == g.order() - static_cast<int>(components(g).size());
}

std::optional<Coloring> color_by_parts(const Graph& g, const std::vector<VertexSet>& parts,
                                       const std::function<std::optional<Coloring>(const Graph&, int)>& color_part) {
    Coloring out{std::vector<int>(g.order(), 0)};
    int offset = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        InducedSubgraph h = induced_subgraph(g, parts[i]);
        auto c = color_part(h.graph, static_cast<int>(i));
        if (!c) return std::nullopt;
        Coloring nc = normalize_colors(*c);
        for (std::size_t j = 0; j < h.labels.size(); ++j) out.color[h.labels[j]] = offset + nc.color[j];
        offset += nc.count();
    }
    return out;
}

/// Clique = union over parts, stable set = best single part.
std::optional<CliqueAndStable> sets_by_parts(
    const WeightedGraph& wg, const std::vector<VertexSet>& parts,
    const std::function<std::optional<CliqueAndStable>(const WeightedGraph&, int)>& solve_part) {
    int n = wg.graph.order();
    CliqueAndStable out{VertexSet(n), VertexSet(n)};
    double best = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        InducedSubgraph h = induced_subgraph(wg.graph, parts[i]);
        auto r = solve_part(induced_subgraph(wg, h), static_cast<int>(i));
        if (!r) return std::nullopt;
        out.clique |= h.lift(r->clique, n);
        VertexSet s = h.lift(r->stable, n);
        double w = weight_of(wg.weights, s);
        if (w > best) {
            best = w;
            out.stable = s;
        }
    }
    return out;
}

std::optional<CliqueAndStable> chordal_sets(const WeightedGraph& wg) {
    auto o = simplicial_order(wg.graph);
    if (!o) return std::nullopt;
    return CliqueAndStable{chordal_mwc(wg, *o), chordal_mwss(wg, *o)};
}

std::optional<CliqueAndStable> buh_sets(const WeightedGraph& wg) {
    auto parts = recognize_bu_h(wg.graph);
    if (!parts) return std::nullopt;
    std::vector<VertexSet> sets;
    for (const auto& p : *parts) sets.push_back(p.vertices);
    return sets_by_parts(wg, sets, [&](const WeightedGraph& h, int i) -> std::optional<CliqueAndStable> {
        int m = h.graph.order();
        switch ((*parts)[i].kind) {
            case BuhKind::K1:
            case BuhKind::K2bar: {
                CliqueAndStable r{VertexSet(m), VertexSet(m)};
                int heavy = -1;
                for (int v = 0; v < m; ++v) {
                    if (h.weights[v] <= 0) continue;
                    r.stable.insert(v);
                    if (heavy == -1 || h.weights[v] > h.weights[heavy]) heavy = v;
                }
                if (heavy != -1) r.clique.insert(heavy);
                return r;
            }
            case BuhKind::OddLongHole:
            case BuhKind::EvenLongHole:
                return hyperhole_mwc_mwss(h);
            case BuhKind::PathForest:
                return chordal_sets(h);
        }
        return std::nullopt;
    });
}

/// A long hyperhole anticomponent, if the graph is one.
bool is_long_hyperhole(const Graph& g) {
    auto p = recognize_hyperhole(g);
    return p && p->length() >= 5;
}

std::optional<CliqueAndStable> bch_sets(const WeightedGraph& wg) {
    auto parts = anticomponents(wg.graph);
    return sets_by_parts(wg, parts, [](const WeightedGraph& h, int) -> std::optional<CliqueAndStable> {
        if (is_chordal(h.graph)) return chordal_sets(h);
        if (is_long_hyperhole(h.graph)) return hyperhole_mwc_mwss(h);
        return std::nullopt;
    });
}

}  // namespace

std::string to_string(GraphClass c) {
    switch (c) {
        case GraphClass::GUT:
            return "gut";
        case GraphClass::GU:
            return "gu";
        case GraphClass::GT:
            return "gt";
        case GraphClass::GUTCapFree:
            return "gutcap";
    }
    return "?";
}

std::optional<GraphClass> graph_class_from_string(const std::string& name) {
    for (GraphClass c : {GraphClass::GUT, GraphClass::GU, GraphClass::GT, GraphClass::GUTCapFree})
        if (to_string(c) == name) return c;
    return std::nullopt;
}

std::vector<ConfigKind> forbidden_kinds(GraphClass c) {
    std::vector<ConfigKind> out{ConfigKind::Theta, ConfigKind::Pyramid, ConfigKind::Prism, ConfigKind::ProperWheel};
    if (c == GraphClass::GU) out.push_back(ConfigKind::TwinWheel);
    if (c == GraphClass::GT) out.push_back(ConfigKind::UniversalWheel);
    if (c == GraphClass::GUTCapFree) out.push_back(ConfigKind::Cap);
    return out;
}

std::string to_string(BuhKind k) {
    switch (k) {
        case BuhKind::K1:
            return "K1";
        case BuhKind::K2bar:
            return "co-K2";
        case BuhKind::OddLongHole:
            return "odd long hole";
        case BuhKind::EvenLongHole:
            return "even long hole";
        case BuhKind::PathForest:
            return "path forest";
    }
    return "?";
}

Recognition recognize_gut(const Graph& g) {
    if (auto c = small_obstruction(g)) return rejected(*c);
    auto failure = check_leaf_anticomponents(g, [](const Graph& h) -> std::optional<std::string> {
        if (!find_long_hole(h)) return std::nullopt;
        if (alpha_at_most_2(h)) return std::nullopt;
        auto ring = recognize_ring(h);
        if (ring && ring->length() >= 5) return std::nullopt;
        return "anticomponent has a long hole, stability number at least 3, and is not a long ring";
    });
    if (failure) return rejected(g, *failure);
    return {true, std::nullopt, std::nullopt};
}

std::optional<std::vector<BuhPart>> recognize_bu_h(const Graph& g) {
    int n = g.order();
    std::vector<BuhPart> parts;
    bool dense = true;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < n - 2) dense = false;
    if (dense) {
        for (const VertexSet& ac : anticomponents(g))
            parts.push_back({ac, ac.size() == 1 ? BuhKind::K1 : BuhKind::K2bar});
        return parts;
    }
    VertexSet rest(n);
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1)
            parts.push_back({VertexSet(n, {v}), BuhKind::K1});
        else
            rest.insert(v);
    }
    Graph h = induced_subgraph(g, rest).graph;
    BuhKind kind;
    if (is_hole(h) && h.order() >= 5)
        kind = h.order() % 2 ? BuhKind::OddLongHole : BuhKind::EvenLongHole;
    else if (h.order() >= 3 && is_path_forest(h))
        kind = BuhKind::PathForest;
    else
        return std::nullopt;
    parts.push_back({rest, kind});
    std::sort(parts.begin(), parts.end(),
              [](const BuhPart& a, const BuhPart& b) { return a.vertices.first() < b.vertices.first(); });
    return parts;
}

Recognition recognize_gu(const Graph& g) {
    DecompositionTree tree = build_tree(g);
    for (int id : tree.leaves()) {
        InducedSubgraph leaf = tree.subgraph(g, id);
        if (!recognize_bu_h(leaf.graph))
            return rejected(g, LeafFailure{leaf.labels, {}, "leaf is not an induced subgraph of a basic graph"});
    }
    return {true, std::nullopt, std::nullopt};
}

Recognition recognize_gt(const Graph& g) {
    DecompositionTree tree = build_tree(g);
    for (int id : tree.leaves()) {
        InducedSubgraph leaf = tree.subgraph(g, id);
        Graph q = true_twin_partition(leaf.graph).quotient;
        if (q.order() == 1) continue;
        if (q.order() == 7 && is_hole(complement(q))) continue;
        if (recognize_ring(q)) continue;
        return rejected(g, LeafFailure{leaf.labels, {}, "twin quotient of leaf is not a ring, K1 or 7-antihole"});
    }
    return {true, std::nullopt, std::nullopt};
}

Recognition recognize_gutcap(const Graph& g) {
    if (auto c = find_small_obstruction(g, ConfigKind::K23)) return rejected(*c);
    if (auto c = find_cap(g)) return rejected(*c);
    auto failure = check_leaf_anticomponents(g, [](const Graph& h) -> std::optional<std::string> {
        if (is_chordal(h) || is_long_hyperhole(h)) return std::nullopt;
        return "anticomponent is neither chordal nor a long hyperhole";
    });
    if (failure) return rejected(g, *failure);
    return {true, std::nullopt, std::nullopt};
}

Recognition recognize(const Graph& g, GraphClass c) {
    switch (c) {
        case GraphClass::GUT:
            return recognize_gut(g);
        case GraphClass::GU:
            return recognize_gu(g);
        case GraphClass::GT:
            return recognize_gt(g);
        case GraphClass::GUTCapFree:
            return recognize_gutcap(g);
    }
    throw std::invalid_argument("unknown class");
}

std::optional<Coloring> color_bu_h(const Graph& g) {
    auto parts = recognize_bu_h(g);
    if (!parts) return std::nullopt;
    std::vector<VertexSet> sets;
    for (const auto& p : *parts) sets.push_back(p.vertices);
    return color_by_parts(g, sets, [&](const Graph& h, int i) -> std::optional<Coloring> {
        switch ((*parts)[i].kind) {
            case BuhKind::K1:
            case BuhKind::K2bar:
                return Coloring{std::vector<int>(h.order(), 1)};
            case BuhKind::OddLongHole:
            case BuhKind::EvenLongHole:
                return hyperhole_color(h);
            case BuhKind::PathForest:
                return chordal_color(h, *simplicial_order(h));
        }
        return std::nullopt;
    });
}

std::optional<VertexSet> mwc_bu_h(const WeightedGraph& g) {
    auto r = buh_sets(g);
    if (!r) return std::nullopt;
    return r->clique;
}

std::optional<VertexSet> mwss_bu_h(const WeightedGraph& g) {
    auto r = buh_sets(g);
    if (!r) return std::nullopt;
    return r->stable;
}

std::optional<Coloring> color_bch(const Graph& g) {
    return color_by_parts(g, anticomponents(g), [](const Graph& h, int) -> std::optional<Coloring> {
        if (auto o = simplicial_order(h)) return chordal_color(h, *o);
        if (is_long_hyperhole(h)) return hyperhole_color(h);
        return std::nullopt;
    });
}

std::optional<VertexSet> mwc_bch(const WeightedGraph& g) {
    auto r = bch_sets(g);
    if (!r) return std::nullopt;
    return r->clique;
}

std::optional<VertexSet> mwss_bch(const WeightedGraph& g) {
    auto r = bch_sets(g);
    if (!r) return std::nullopt;
    return r->stable;
}

std::optional<VertexSet> mwss_nonneighborhood_chordal(const WeightedGraph& wg) {
    const Graph& g = wg.graph;
    int n = g.order();
    VertexSet best(n);
    double best_w = 0;
    for (int u = 0; u < n; ++u) {
        InducedSubgraph h = induced_subgraph(g, g.vertices() - g.neighbors(u));
        auto o = simplicial_order(h.graph);
        if (!o) return std::nullopt;
        VertexSet s = h.lift(chordal_mwss(induced_subgraph(wg, h), *o), n);
        double w = weight_of(wg.weights, s);
        if (w > best_w) {
            best_w = w;
            best = s;
        }
    }
    return best;
}

std::optional<Coloring> color_gu(const Graph& g) { return solve_coloring(g, color_bu_h); }
std::optional<VertexSet> mwc_gu(const WeightedGraph& g) { return solve_mwc(g, mwc_bu_h); }
std::optional<VertexSet> mwss_gu(const WeightedGraph& g) { return solve_mwss(g, mwss_bu_h); }

std::optional<CliqueAndStable> mwc_mwss_gu(const WeightedGraph& g) {
    auto c = mwc_gu(g);
    auto s = mwss_gu(g);
    if (!c || !s) return std::nullopt;
    return CliqueAndStable{*c, *s};
}

std::optional<VertexSet> mwc_gt(const WeightedGraph& wg) {
    const Graph& g = wg.graph;
    int n = g.order();
    VertexSet best(n);
    double best_w = 0;
    for (int u = 0; u < n; ++u) {
        InducedSubgraph h = induced_subgraph(g, g.closed_neighborhood(u));
        auto o = simplicial_order(h.graph);
        if (!o) return std::nullopt;
        VertexSet c = h.lift(chordal_mwc(induced_subgraph(wg, h), *o), n);
        double w = weight_of(wg.weights, c);
        if (w > best_w) {
            best_w = w;
            best = c;
        }
    }
    return best;
}

std::optional<VertexSet> mwss_gt(const WeightedGraph& g) { return solve_mwss(g, mwss_nonneighborhood_chordal); }

std::optional<Coloring> color_gutcap(const Graph& g) { return solve_coloring(g, color_bch); }
std::optional<VertexSet> mwc_gutcap(const WeightedGraph& g) { return solve_mwc(g, mwc_bch); }
std::optional<VertexSet> mwss_gutcap(const WeightedGraph& g) { return solve_mwss(g, mwss_bch); }

std::optional<CliqueAndStable> mwc_mwss_gutcap(const WeightedGraph& g) {
    auto c = mwc_gutcap(g);
    auto s = mwss_gutcap(g);
    if (!c || !s) return std::nullopt;
    return CliqueAndStable{*c, *s};
}

std::optional<DoubleStarCutset> double_star_cutset_from_cap(const Graph& g, const Certificate& cap) {
    if (cap.kind != ConfigKind::Cap || !check_certificate(g, cap))
        throw std::invalid_argument("double_star_cutset_from_cap: not a valid cap");
    const auto& hole = cap.vertices;
    int x = hole[0], y = hole[1];
    int c = *cap.center;
    HoleExpansion ex = hole_expansion(g, hole);
    int k = static_cast<int>(hole.size());

    VertexSet s = ex.universal;
    s.insert(x);
    s.insert(y);
    for (int i : {0, 1, 2, k - 1}) {
        VertexSet t = ex.twin_sets[i];
        t.erase(hole[i]);
        s |= t;
    }

    VertexSet centers = g.closed_neighborhood(x) | g.closed_neighborhood(y);
    if (!s.is_subset_of(centers) || s.contains(c)) return std::nullopt;
    VertexSet reach = components(g, g.vertices() - s).front();
    for (const VertexSet& comp : components(g, g.vertices() - s))
        if (comp.contains(c)) reach = comp;
    for (int i = 2; i < k; ++i)
        if (reach.contains(hole[i])) return std::nullopt;
    return DoubleStarCutset{s, x, y};
}

}  // namespace truemper
