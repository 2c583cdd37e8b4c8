#include "truemper/decomposition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace truemper {

namespace {

VertexSet component_of(const Graph& g, int v, const VertexSet& within) {
    VertexSet comp(g.order());
    VertexSet frontier(g.order());
    frontier.insert(v);
    while (!frontier.empty()) {
        comp |= frontier;
        VertexSet grow(g.order());
        for (int u : frontier) grow |= g.neighbors(u);
        grow &= within;
        grow -= comp;
        frontier = grow;
    }
    return comp;
}

VertexSet neighborhood_of(const Graph& g, const VertexSet& s) {
    VertexSet out(g.order());
    for (int v : s) out |= g.neighbors(v);
    return out - s;
}

CliqueCutPartition lift(const InducedSubgraph& sub, const CliqueCutPartition& p, int n) {
    return {sub.lift(p.a, n), sub.lift(p.b, n), sub.lift(p.c, n)};
}

}  // namespace

MinimalTriangulation mcs_m(const Graph& g) {
    int n = g.order();
    std::vector<int> weight(n, 0);
    std::vector<VertexSet> madj(n, VertexSet(n));
    VertexSet unnumbered = g.vertices();
    std::vector<int> picks;
    picks.reserve(n);
    for (int step = 0; step < n; ++step) {
        int v = -1;
        for (int u : unnumbered)
            if (v == -1 || weight[u] > weight[v]) v = u;
        unnumbered.erase(v);

        int top = 0;
        for (int u : unnumbered) top = std::max(top, weight[u]);
        std::vector<VertexSet> level(top + 1, VertexSet(n));
        for (int u : unnumbered) level[weight[u]].insert(u);

        // u joins the fill neighbourhood of v if some v-u path has all interior weights below w(u).
        VertexSet reach(n), reach_nb = g.neighbors(v), upto(n), fill(n);
        reach.insert(v);
        for (int t = 0; t <= top; ++t) {
            fill |= reach_nb & level[t];
            upto |= level[t];
            while (true) {
                VertexSet grow = (reach_nb & upto) - reach;
                if (grow.empty()) break;
                reach |= grow;
                for (int x : grow) reach_nb |= g.neighbors(x);
            }
        }
        for (int u : fill) {
            ++weight[u];
            madj[u].insert(v);
        }
        picks.push_back(v);
    }
    std::reverse(picks.begin(), picks.end());
    return {std::move(picks), std::move(madj)};
}

std::optional<CliqueCutPartition> find_clique_cut(const Graph& g) {
    int n = g.order();
    MinimalTriangulation t = mcs_m(g);
    std::optional<CliqueCutPartition> best;
    int best_size = n + 1;
    for (int v : t.order) {
        const VertexSet& sep = t.madj[v];
        if (!is_clique(g, sep)) continue;
        VertexSet a = component_of(g, v, g.vertices() - sep);
        VertexSet c = neighborhood_of(g, a);
        VertexSet b = g.vertices() - a - c;
        if (b.empty()) continue;
        int size = a.size() + c.size();
        if (size < best_size) {
            best_size = size;
            best = CliqueCutPartition{a, b, c};
        }
    }
    return best;
}

std::optional<CliqueCutPartition> find_extreme_clique_cut(const Graph& g) {
    auto p = find_clique_cut(g);
    if (!p) return std::nullopt;
    int n = g.order();
    while (true) {
        InducedSubgraph side = induced_subgraph(g, p->a | p->c);
        auto q = find_clique_cut(side.graph);
        if (!q) return p;
        CliqueCutPartition r = lift(side, *q, n);
        if (r.a.intersects(p->c)) std::swap(r.a, r.b);
        p = CliqueCutPartition{r.a, p->b | r.b, r.c};
    }
}

std::vector<int> DecompositionTree::leaves() const {
    std::vector<int> out;
    for (const auto& node : nodes)
        if (node.leaf) out.push_back(node.id);
    return out;
}

InducedSubgraph DecompositionTree::subgraph(const Graph& g, int node) const {
    return induced_subgraph(g, nodes.at(node).vertices);
}

DecompositionTree build_tree(const Graph& g) {
    int n = g.order();
    DecompositionTree tree;
    VertexSet alive = g.vertices();
    int parent = -1;
    while (true) {
        InducedSubgraph sub = induced_subgraph(g, alive);
        auto p = find_extreme_clique_cut(sub.graph);
        int id = static_cast<int>(tree.nodes.size());
        TreeNode node;
        node.id = id;
        node.parent = parent;
        node.vertices = alive;
        node.cutset = VertexSet(n);
        if (!p) {
            tree.nodes.push_back(node);
            break;
        }
        CliqueCutPartition cut = lift(sub, *p, n);
        node.leaf = false;
        node.cutset = cut.c;
        node.children = {id + 1, id + 2};
        tree.nodes.push_back(node);

        TreeNode side;
        side.id = id + 1;
        side.parent = id;
        side.vertices = cut.a | cut.c;
        side.cutset = VertexSet(n);
        tree.nodes.push_back(side);

        alive = cut.b | cut.c;
        parent = id;
    }
    return tree;
}

GluedGraph glue(const Graph& g1, const Graph& g2, std::span<const std::pair<int, int>> shared) {
    VertexSet c1(g1.order()), c2(g2.order());
    std::vector<int> second(g2.order(), -1);
    for (auto [a, b] : shared) {
        if (a < 0 || a >= g1.order() || b < 0 || b >= g2.order()) throw std::invalid_argument("glue: vertex out of range");
        if (c1.contains(a) || c2.contains(b)) throw std::invalid_argument("glue: repeated shared vertex");
        c1.insert(a);
        c2.insert(b);
        second[b] = a;
    }
    if (!is_clique(g1, c1) || !is_clique(g2, c2)) throw std::invalid_argument("glue: shared vertices are not a clique");
    int next = g1.order();
    for (int v = 0; v < g2.order(); ++v)
        if (second[v] == -1) second[v] = next++;
    Graph out(next);
    for (auto [u, v] : g1.edges()) out.add_edge(u, v);
    for (auto [u, v] : g2.edges())
        if (!out.adjacent(second[u], second[v])) out.add_edge(second[u], second[v]);
    return {std::move(out), std::move(second)};
}

Coloring normalize_colors(const Coloring& c) {
    std::map<int, int> rename;
    Coloring out{std::vector<int>(c.color.size())};
    for (std::size_t v = 0; v < c.color.size(); ++v) {
        auto it = rename.find(c.color[v]);
        if (it == rename.end()) it = rename.emplace(c.color[v], static_cast<int>(rename.size()) + 1).first;
        out.color[v] = it->second;
    }
    return out;
}

std::optional<Coloring> solve_coloring(const Graph& g, const LeafColorer& leaf) {
    DecompositionTree tree = build_tree(g);
    int n = g.order();
    auto color_leaf = [&](int node) -> std::optional<std::pair<InducedSubgraph, Coloring>> {
        InducedSubgraph sub = tree.subgraph(g, node);
        auto c = leaf(sub.graph);
        if (!c) return std::nullopt;
        if (!is_proper_coloring(sub.graph, *c)) throw std::logic_error("leaf colorer returned an improper coloring");
        return std::make_pair(std::move(sub), normalize_colors(*c));
    };

    std::vector<int> color(n, 0);
    auto bottom = color_leaf(static_cast<int>(tree.nodes.size()) - 1);
    if (!bottom) return std::nullopt;
    for (std::size_t i = 0; i < bottom->first.labels.size(); ++i) color[bottom->first.labels[i]] = bottom->second.color[i];

    for (int id = static_cast<int>(tree.nodes.size()) - 2; id >= 0; --id) {
        const TreeNode& node = tree.nodes[id];
        if (node.leaf) continue;
        auto side = color_leaf(node.children[0]);
        if (!side) return std::nullopt;
        const auto& [sub, c] = *side;
        std::map<int, int> rename;
        std::vector<bool> taken(n + 2, false);
        for (std::size_t i = 0; i < sub.labels.size(); ++i) {
            int v = sub.labels[i];
            if (node.cutset.contains(v)) {
                rename[c.color[i]] = color[v];
                taken[color[v]] = true;
            }
        }
        int fresh = 1;
        std::vector<int> own;
        for (int x : c.color) own.push_back(x);
        std::sort(own.begin(), own.end());
        own.erase(std::unique(own.begin(), own.end()), own.end());
        for (int x : own) {
            if (rename.count(x)) continue;
            while (taken[fresh]) ++fresh;
            rename[x] = fresh;
            taken[fresh] = true;
        }
        for (std::size_t i = 0; i < sub.labels.size(); ++i) {
            int v = sub.labels[i];
            if (!node.cutset.contains(v)) color[v] = rename[c.color[i]];
        }
    }
    return Coloring{std::move(color)};
}

std::optional<VertexSet> solve_mwc(const WeightedGraph& wg, const LeafSetSolver& leaf) {
    DecompositionTree tree = build_tree(wg.graph);
    int n = wg.graph.order();
    std::optional<VertexSet> best;
    double best_w = 0;
    for (int id : tree.leaves()) {
        InducedSubgraph sub = tree.subgraph(wg.graph, id);
        auto s = leaf(induced_subgraph(wg, sub));
        if (!s) return std::nullopt;
        VertexSet lifted = sub.lift(*s, n);
        double w = weight_of(wg.weights, lifted);
        if (!best || w > best_w) {
            best = lifted;
            best_w = w;
        }
    }
    return best;
}

namespace {

struct MwssSolver {
    const Graph& g;
    const DecompositionTree& tree;
    const LeafSetSolver& leaf;

    std::optional<VertexSet> solve_on(const VertexSet& s, const std::vector<double>& w) const {
        InducedSubgraph sub = induced_subgraph(g, s);
        std::vector<double> sw;
        sw.reserve(sub.labels.size());
        for (int v : sub.labels) sw.push_back(w[v]);
        auto r = leaf(WeightedGraph(sub.graph, std::move(sw)));
        if (!r) return std::nullopt;
        return sub.lift(*r, g.order());
    }

    std::optional<VertexSet> solve(int id, const std::vector<double>& w) const {
        const TreeNode& node = tree.nodes[id];
        if (node.leaf) return solve_on(node.vertices, w);

        const VertexSet& c = node.cutset;
        VertexSet a = tree.nodes[node.children[0]].vertices - c;
        auto sa = solve_on(a, w);
        if (!sa) return std::nullopt;
        double alpha_a = weight_of(w, *sa);

        std::vector<double> wb = w;
        std::map<int, VertexSet> with;
        for (int x : c) {
            VertexSet ax = a;
            ax.insert(x);
            auto s = solve_on(ax, w);
            if (!s) return std::nullopt;
            wb[x] = weight_of(w, *s) - alpha_a;
            with.emplace(x, *s);
        }

        auto sb = solve(node.children[1], wb);
        if (!sb) return std::nullopt;
        for (int v : sb->to_vector())
            if (wb[v] <= 0) sb->erase(v);

        VertexSet out = *sb;
        VertexSet shared = *sb & c;
        if (shared.empty())
            out |= *sa;
        else
            out |= with.at(shared.first());
        return out;
    }
};

}  // namespace

std::optional<VertexSet> solve_mwss(const WeightedGraph& wg, const LeafSetSolver& leaf) {
    DecompositionTree tree = build_tree(wg.graph);
    MwssSolver solver{wg.graph, tree, leaf};
    return solver.solve(0, wg.weights);
}

}  // namespace truemper
