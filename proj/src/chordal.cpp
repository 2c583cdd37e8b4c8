#include "truemper/chordal.hpp"

#include <algorithm>
#include <stdexcept>

namespace truemper {

namespace {

/// Maximum cardinality search; the reverse visiting order is a candidate ordering.
std::vector<int> mcs_order(const Graph& g) {
    int n = g.order();
    std::vector<int> label(n, 0);
    std::vector<bool> done(n, false);
    std::vector<int> visit;
    visit.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!done[v] && (best == -1 || label[v] > label[best])) best = v;
        done[best] = true;
        visit.push_back(best);
        for (int u : g.neighbors(best))
            if (!done[u]) ++label[u];
    }
    std::reverse(visit.begin(), visit.end());
    return visit;
}

std::vector<int> positions(std::span<const int> order, int n) {
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    return pos;
}

void require_order(const Graph& g, const EliminationOrder& o) {
    if (!is_simplicial_order(g, o.order)) throw std::invalid_argument("not a simplicial elimination ordering");
}

}  // namespace

bool is_simplicial_order(const Graph& g, std::span<const int> order) {
    int n = g.order();
    if (static_cast<int>(order.size()) != n) return false;
    auto pos = positions(order, n);
    for (int p : pos)
        if (p == -1) return false;
    VertexSet later = g.vertices();
    for (int v : order) {
        later.erase(v);
        VertexSet up = g.neighbors(v) & later;
        int parent = -1;
        for (int u : up)
            if (parent == -1 || pos[u] < pos[parent]) parent = u;
        if (parent == -1) continue;
        up.erase(parent);
        if (!up.is_subset_of(g.neighbors(parent))) return false;
    }
    return true;
}

std::optional<EliminationOrder> simplicial_order(const Graph& g) {
    auto order = mcs_order(g);
    if (!is_simplicial_order(g, order)) return std::nullopt;
    return EliminationOrder{std::move(order)};
}

bool is_chordal(const Graph& g) { return simplicial_order(g).has_value(); }

Coloring chordal_color(const Graph& g, const EliminationOrder& o) {
    require_order(g, o);
    Coloring c{std::vector<int>(g.order(), 0)};
    for (auto it = o.order.rbegin(); it != o.order.rend(); ++it) {
        std::vector<bool> used(g.order() + 2, false);
        for (int u : g.neighbors(*it))
            if (c.color[u]) used[c.color[u]] = true;
        int col = 1;
        while (used[col]) ++col;
        c.color[*it] = col;
    }
    return c;
}

VertexSet chordal_mwc(const WeightedGraph& wg, const EliminationOrder& o) {
    const Graph& g = wg.graph;
    require_order(g, o);
    VertexSet positive(g.order());
    for (int v = 0; v < g.order(); ++v)
        if (wg.weights[v] > 0) positive.insert(v);
    VertexSet best(g.order());
    double best_w = 0;
    VertexSet later = positive;
    for (int v : o.order) {
        if (!positive.contains(v)) continue;
        VertexSet c = g.neighbors(v) & later;
        c.insert(v);
        later.erase(v);
        double w = weight_of(wg.weights, c);
        if (w > best_w) {
            best_w = w;
            best = c;
        }
    }
    return best;
}

VertexSet chordal_mwss(const WeightedGraph& wg, const EliminationOrder& o) {
    const Graph& g = wg.graph;
    require_order(g, o);
    int n = g.order();
    std::vector<double> residual(n);
    for (int v = 0; v < n; ++v) residual[v] = std::max(0.0, wg.weights[v]);
    std::vector<int> red;
    VertexSet later = g.vertices();
    for (int v : o.order) {
        later.erase(v);
        double r = residual[v];
        if (r <= 0) continue;
        red.push_back(v);
        for (int u : g.neighbors(v) & later) residual[u] = std::max(0.0, residual[u] - r);
    }
    VertexSet chosen(n);
    for (auto it = red.rbegin(); it != red.rend(); ++it)
        if (!g.neighbors(*it).intersects(chosen)) chosen.insert(*it);
    return chosen;
}

}  // namespace truemper
