#include "truemper/rings.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "truemper/chordal.hpp"

namespace truemper {

namespace {

std::vector<int> part_index(const Graph& g, const GoodPartition& p) {
    std::vector<int> part(g.order(), -1);
    for (std::size_t i = 0; i < p.parts.size(); ++i)
        for (int v : p.parts[i]) {
            if (v < 0 || v >= g.order()) throw std::invalid_argument("partition vertex out of range");
            if (part[v] != -1) throw std::invalid_argument("partition repeats a vertex");
            part[v] = static_cast<int>(i);
        }
    for (int x : part)
        if (x == -1) throw std::invalid_argument("partition misses a vertex");
    return part;
}

/// Order by decreasing degree and check that closed neighbourhoods form a chain.
std::optional<std::vector<int>> nested_order(const Graph& g, const VertexSet& x) {
    std::vector<int> order = x.to_vector();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        if (!g.closed_neighborhood(order[i + 1]).is_subset_of(g.closed_neighborhood(order[i]))) return std::nullopt;
    return order;
}

std::vector<int> cycle_order(const Graph& cycle) {
    std::vector<int> order{0};
    int prev = -1, cur = 0;
    while (true) {
        int next = -1;
        for (int u : cycle.neighbors(cur))
            if (u != prev) {
                next = u;
                break;
            }
        if (next == 0 || next == -1) break;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

GoodPartition parts_in_cycle_order(const TwinPartition& tp, const Graph& cycle) {
    GoodPartition p;
    for (int q : cycle_order(cycle)) p.parts.push_back(tp.parts[q]);
    return p;
}

/// Maximum weight stable set of a path with the given weights (indices into `w`).
std::vector<int> path_mwss(const std::vector<double>& w, int from, int to) {
    std::vector<int> out;
    if (from > to) return out;
    int len = to - from + 1;
    std::vector<double> take(len), best(len);
    for (int i = 0; i < len; ++i) {
        double wi = std::max(0.0, w[from + i]);
        double before2 = i >= 2 ? best[i - 2] : 0.0;
        take[i] = wi + before2;
        best[i] = std::max(take[i], i >= 1 ? best[i - 1] : 0.0);
    }
    for (int i = len - 1; i >= 0;) {
        double prev = i >= 1 ? best[i - 1] : 0.0;
        if (take[i] > prev && w[from + i] > 0) {
            out.push_back(from + i);
            i -= 2;
        } else {
            --i;
        }
    }
    return out;
}

}  // namespace

bool verify_good_partition(const Graph& g, const GoodPartition& p) {
    part_index(g, p);
    int k = p.length();
    if (k < 4) return false;
    for (const auto& x : p.parts)
        if (x.empty()) return false;
    std::vector<VertexSet> sets;
    for (const auto& x : p.parts) sets.push_back(VertexSet::from(g.order(), x));
    for (int i = 0; i < k; ++i) {
        const VertexSet& prev = sets[(i + k - 1) % k];
        const VertexSet& next = sets[(i + 1) % k];
        VertexSet around = prev | sets[i] | next;
        if (!is_clique(g, sets[i])) return false;
        bool has_hub = false;
        for (int v : sets[i]) {
            if (!g.neighbors(v).is_subset_of(around)) return false;
            if ((prev | next).is_subset_of(g.neighbors(v))) has_hub = true;
        }
        if (!has_hub) return false;
        for (int a : sets[i])
            for (int b : sets[i])
                if (a < b && !dominates(g, a, b) && !dominates(g, b, a)) return false;
    }
    return true;
}

bool has_nested_orderings(const Graph& g, const GoodPartition& p) {
    int k = p.length();
    for (int i = 0; i < k; ++i) {
        const auto& x = p.parts[i];
        if (x.empty()) return false;
        VertexSet around = VertexSet::from(g.order(), p.parts[(i + k - 1) % k]) | VertexSet::from(g.order(), x) |
                           VertexSet::from(g.order(), p.parts[(i + 1) % k]);
        if (g.closed_neighborhood(x[0]) != around) return false;
        for (std::size_t j = 0; j + 1 < x.size(); ++j)
            if (!g.closed_neighborhood(x[j + 1]).is_subset_of(g.closed_neighborhood(x[j]))) return false;
    }
    return true;
}

std::optional<GoodPartition> recognize_ring(const Graph& g) {
    int n = g.order();
    if (!is_connected(g) || is_chordal(g)) return std::nullopt;

    int x = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(x)) x = v;
    VertexSet nx = g.closed_neighborhood(x);
    VertexSet x1(n);
    for (int y : nx)
        if (g.closed_neighborhood(y).is_subset_of(nx)) x1.insert(y);
    auto first = nested_order(g, x1);
    if (!first) return std::nullopt;
    VertexSet rest = g.vertices() - x1;
    if (rest.empty() || !is_chordal(induced_subgraph(g, rest).graph)) return std::nullopt;

    for (const VertexSet& comp : components(g, g.neighbors(first->front()) - x1)) {
        auto second = nested_order(g, comp);
        if (!second) continue;
        GoodPartition p{{*first, *second}};
        VertexSet covered = x1 | comp;
        bool ok = true;
        while (true) {
            VertexSet next = g.neighbors(p.parts.back().front()) - covered;
            if (next.empty()) break;
            auto ordered = nested_order(g, next);
            if (!ordered) {
                ok = false;
                break;
            }
            p.parts.push_back(*ordered);
            covered |= next;
        }
        if (!ok || p.length() < 4 || covered.size() != n) continue;
        std::vector<int> hubs;
        for (const auto& part : p.parts) hubs.push_back(part.front());
        InducedSubgraph h = induced_subgraph(g, VertexSet::from(n, hubs));
        if (!is_hole(h.graph)) continue;
        if (verify_good_partition(g, p)) return p;
    }
    return std::nullopt;
}

std::optional<GoodPartition> recognize_hyperhole(const Graph& g) {
    TwinPartition tp = true_twin_partition(g);
    if (!is_hole(tp.quotient)) return std::nullopt;
    return parts_in_cycle_order(tp, tp.quotient);
}

std::optional<GoodPartition> recognize_hyperantihole(const Graph& g) {
    TwinPartition tp = true_twin_partition(g);
    Graph co = complement(tp.quotient);
    if (!is_hole(co)) return std::nullopt;
    return parts_in_cycle_order(tp, co);
}

CycleColoring weighted_cycle_color(int k, std::span<const int> mult) {
    if (k < 3) throw std::invalid_argument("weighted_cycle_color: k must be at least 3");
    if (static_cast<int>(mult.size()) != k) throw std::invalid_argument("weighted_cycle_color: need k multiplicities");
    for (int m : mult)
        if (m < 1) throw std::invalid_argument("weighted_cycle_color: multiplicities must be positive");

    std::vector<int> demand(mult.begin(), mult.end());
    int edge_max = 0;
    for (int i = 0; i < k; ++i) edge_max = std::max(edge_max, demand[i] + demand[(i + 1) % k]);
    int count = edge_max;
    if (k % 2 == 1) {
        int total = std::accumulate(demand.begin(), demand.end(), 0);
        int r = k / 2;
        count = std::max(count, (total + r - 1) / r);
    }

    CycleColoring out{std::vector<std::vector<int>>(k), count};
    int color = 1;
    auto all_positive = [&] { return std::all_of(demand.begin(), demand.end(), [](int d) { return d > 0; }); };

    // Spend one color at a time on a large stable set while the cycle is intact.
    while (all_positive()) {
        int left = count - color + 1;
        std::vector<int> chosen;
        if (k % 2 == 0) {
            for (int i = 0; i < k; i += 2) chosen.push_back(i);
        } else {
            int j = 0;
            while (demand[j] + demand[(j + 1) % k] >= left)
                if (++j == k) throw std::logic_error("weighted_cycle_color: no slack edge");
            for (int s = 2; s < k; s += 2) chosen.push_back((j + s) % k);
        }
        for (int v : chosen) {
            out.color_sets[v].push_back(color);
            --demand[v];
        }
        ++color;
    }

    // The rest is a union of paths; wrap consecutive intervals around the remaining colors.
    int left = count - color + 1;
    int zero = 0;
    while (demand[zero] > 0) ++zero;
    int offset = 0;
    for (int step = 1; step <= k; ++step) {
        int v = (zero + step) % k;
        if (demand[v] == 0) {
            offset = 0;
            continue;
        }
        for (int c = 0; c < demand[v]; ++c) out.color_sets[v].push_back(color + (offset + c) % left);
        offset = (offset + demand[v]) % left;
    }
    for (auto& s : out.color_sets) std::sort(s.begin(), s.end());
    return out;
}

std::optional<Coloring> hyperhole_color(const Graph& g) {
    auto p = recognize_hyperhole(g);
    if (!p) return std::nullopt;
    std::vector<int> mult;
    for (const auto& part : p->parts) mult.push_back(static_cast<int>(part.size()));
    CycleColoring cc = weighted_cycle_color(p->length(), mult);
    Coloring c{std::vector<int>(g.order(), 0)};
    for (int i = 0; i < p->length(); ++i)
        for (std::size_t j = 0; j < p->parts[i].size(); ++j) c.color[p->parts[i][j]] = cc.color_sets[i][j];
    return c;
}

std::optional<CliqueAndStable> hyperhole_mwc_mwss(const WeightedGraph& wg) {
    const Graph& g = wg.graph;
    int n = g.order();
    VertexSet positive(n);
    for (int v = 0; v < n; ++v)
        if (wg.weights[v] > 0) positive.insert(v);
    if (positive.empty()) return CliqueAndStable{VertexSet(n), VertexSet(n)};

    InducedSubgraph sub = induced_subgraph(g, positive);
    WeightedGraph sw = induced_subgraph(wg, sub);
    if (auto o = simplicial_order(sub.graph)) {
        return CliqueAndStable{sub.lift(chordal_mwc(sw, *o), n), sub.lift(chordal_mwss(sw, *o), n)};
    }
    auto p = recognize_hyperhole(sub.graph);
    if (!p) return std::nullopt;
    int k = p->length();

    std::vector<double> part_weight(k, 0.0);
    std::vector<int> rep(k);
    std::vector<double> rep_weight(k);
    for (int i = 0; i < k; ++i) {
        rep[i] = p->parts[i][0];
        for (int v : p->parts[i]) {
            part_weight[i] += sw.weights[v];
            if (sw.weights[v] > sw.weights[rep[i]] || (sw.weights[v] == sw.weights[rep[i]] && v < rep[i])) rep[i] = v;
        }
        rep_weight[i] = sw.weights[rep[i]];
    }

    int best = 0;
    for (int i = 1; i < k; ++i)
        if (part_weight[i] + part_weight[(i + 1) % k] > part_weight[best] + part_weight[(best + 1) % k]) best = i;
    VertexSet clique(sub.graph.order());
    for (int v : p->parts[best]) clique.insert(v);
    for (int v : p->parts[(best + 1) % k]) clique.insert(v);

    // Either the stable set avoids position 0, or it uses it and avoids both neighbours.
    auto s1 = path_mwss(rep_weight, 1, k - 1);
    auto s2 = path_mwss(rep_weight, 2, k - 2);
    s2.push_back(0);
    auto total = [&](const std::vector<int>& s) {
        double t = 0;
        for (int i : s) t += rep_weight[i];
        return t;
    };
    const auto& pick = total(s2) > total(s1) ? s2 : s1;
    VertexSet stable(sub.graph.order());
    for (int i : pick) stable.insert(rep[i]);
    return CliqueAndStable{sub.lift(clique, n), sub.lift(stable, n)};
}

}  // namespace truemper
