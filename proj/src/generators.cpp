#include "truemper/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "truemper/decomposition.hpp"
#include "truemper/detectors.hpp"

namespace truemper {

int Rng::uniform(int lo, int hi) {
    if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return lo + static_cast<int>(x % span);
}

Graph cycle_graph(int k) {
    Graph g(k);
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph edgeless_graph(int n) { return Graph(n); }

Graph disjoint_union(const Graph& a, const Graph& b) {
    int na = a.order();
    Graph g(na + b.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(na + u, na + v);
    return g;
}

Graph join(const Graph& a, const Graph& b) {
    Graph g = disjoint_union(a, b);
    for (int u = 0; u < a.order(); ++u)
        for (int v = 0; v < b.order(); ++v) g.add_edge(u, a.order() + v);
    return g;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    Graph h(g.order());
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

Graph shuffle_labels(const Graph& g, Rng& rng) {
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    return relabel(g, perm);
}

namespace {

void check_parts(int k, std::span<const int> sizes, int min_k) {
    if (k < min_k) throw std::invalid_argument("length must be at least " + std::to_string(min_k));
    if (static_cast<int>(sizes.size()) != k) throw std::invalid_argument("need one size per part");
    for (int s : sizes)
        if (s < 1) throw std::invalid_argument("part sizes must be positive");
}

std::vector<int> part_starts(std::span<const int> sizes) {
    std::vector<int> start(sizes.size() + 1, 0);
    for (std::size_t i = 0; i < sizes.size(); ++i) start[i + 1] = start[i] + sizes[i];
    return start;
}

/// Parts are cliques; part i is complete to part j whenever linked(i, j).
template <class Linked>
Graph blow_up(int k, std::span<const int> sizes, Linked linked) {
    auto start = part_starts(sizes);
    Graph g(start[k]);
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            if (i != j && !linked(i, j)) continue;
            for (int u = start[i]; u < start[i + 1]; ++u)
                for (int v = start[j]; v < start[j + 1]; ++v)
                    if (u != v) g.add_edge(u, v);
        }
    return g;
}

/// Greedy clique of up to `size` vertices around a random vertex.
std::vector<int> random_clique(const Graph& g, int size, Rng& rng) {
    std::vector<int> clique;
    if (size == 0) return clique;
    clique.push_back(rng.uniform(0, g.order() - 1));
    VertexSet common = g.neighbors(clique[0]);
    while (static_cast<int>(clique.size()) < size && !common.empty()) {
        auto cands = common.to_vector();
        int v = cands[rng.uniform(0, static_cast<int>(cands.size()) - 1)];
        clique.push_back(v);
        common &= g.neighbors(v);
    }
    return clique;
}

Graph random_graph(Rng& rng, int n, double p) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p)) g.add_edge(u, v);
    return g;
}

/// Two cliques joined by a staircase: always chordal and cobipartite.
Graph chordal_cobipartite(Rng& rng, int n) {
    int a = rng.uniform(0, n);
    int b = n - a;
    if (a == 0 || b == 0) return complete_graph(n);
    Graph g = disjoint_union(complete_graph(a), complete_graph(b));
    int reach = rng.uniform(0, b);
    for (int u = 0; u < a; ++u) {
        for (int v = 0; v < reach; ++v) g.add_edge(u, a + v);
        reach = rng.uniform(0, reach);
    }
    return g;
}

Graph join_all(const std::vector<Graph>& parts) {
    Graph g = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) g = join(g, parts[i]);
    return g;
}

Graph with_clique(const Graph& g, int t) { return t > 0 ? join(g, complete_graph(t)) : g; }

/// Small graph passing `accept`, found by rejection; falls back to K1.
template <class Accept>
Graph rejection_sample(Rng& rng, int max_n, Accept accept) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        int n = rng.uniform(1, max_n);
        Graph g = random_graph(rng, n, 0.2 + 0.7 * rng.real());
        if (accept(g)) return g;
    }
    return Graph(1);
}

Graph basic_gu(Rng& rng, int m) {
    if (m >= 5 && rng.chance(0.5)) {
        int k = rng.uniform(5, std::min(m, 9));
        return with_clique(cycle_graph(k), rng.uniform(0, std::min(m - k, 4)));
    }
    int pairs = rng.uniform(0, std::min(m / 2, 3));
    int singles = rng.uniform(pairs == 0 ? 1 : 0, std::min(m - 2 * pairs, 4));
    std::vector<Graph> parts;
    for (int i = 0; i < pairs; ++i) parts.push_back(edgeless_graph(2));
    if (singles > 0) parts.push_back(complete_graph(singles));
    return join_all(parts);
}

Graph basic_gt(Rng& rng, int m) {
    int choice = rng.uniform(0, 2);
    if (choice == 1 && m >= 4) {
        int k = rng.uniform(4, std::min(m, 8));
        auto sizes = random_sizes(rng, k, m, 3);
        return gen_ring(rng.next(), k, sizes).graph;
    }
    if (choice == 2 && m >= 7) {
        auto sizes = random_sizes(rng, 7, m, 2);
        return gen_hyperantihole(7, sizes);
    }
    return complete_graph(rng.uniform(1, std::min(m, 5)));
}

Graph basic_gutcap(Rng& rng, int m) {
    if (m >= 6 && rng.chance(0.4)) {
        int k = rng.uniform(6, std::min(m, 9));
        int t = rng.uniform(0, std::min(m - k, 2));
        auto sizes = random_sizes(rng, k, m - t, 2);
        return with_clique(gen_hyperhole(k, sizes), t);
    }
    std::vector<Graph> parts;
    int left = m;
    int count = rng.uniform(1, 3);
    for (int i = 0; i < count && left > 0; ++i) {
        if (left >= 5 && rng.chance(0.5)) {
            auto sizes = random_sizes(rng, 5, std::min(left, 7), 2);
            parts.push_back(gen_hyperhole(5, sizes));
        } else {
            parts.push_back(chordal_cobipartite(rng, rng.uniform(1, std::min(left, 4))));
        }
        left -= parts.back().order();
    }
    return join_all(parts);
}

Graph basic_gut(Rng& rng, int m) {
    int choice = rng.uniform(0, 2);
    if (choice == 0 && m >= 5) {
        int k = rng.uniform(5, std::min(m, 8));
        int t = rng.uniform(0, std::min(m - k, 2));
        auto sizes = random_sizes(rng, k, m - t, 3);
        return with_clique(gen_ring(rng.next(), k, sizes).graph, t);
    }
    if (choice == 1) {
        return rejection_sample(rng, std::min(m, 7), [](const Graph& g) {
            return !find_long_hole(g) && !find_small_obstruction(g, ConfigKind::K23) &&
                   !find_small_obstruction(g, ConfigKind::C6bar);
        });
    }
    std::vector<Graph> parts;
    int left = m;
    int count = rng.uniform(1, 2);
    for (int i = 0; i < count && left > 0; ++i) {
        if (left >= 5 && rng.chance(0.5)) {
            auto sizes = random_sizes(rng, 5, std::min(left, 7), 2);
            parts.push_back(gen_hyperhole(5, sizes));
        } else {
            parts.push_back(rejection_sample(rng, std::min(left, 6), [](const Graph& g) {
                return alpha_at_most_2(g) && !find_long_hole(g) && !find_small_obstruction(g, ConfigKind::C6bar);
            }));
        }
        left -= parts.back().order();
    }
    return join_all(parts);
}

}  // namespace

std::vector<int> random_sizes(Rng& rng, int k, int budget, int max_part) {
    if (budget < k) throw std::invalid_argument("random_sizes: budget below part count");
    std::vector<int> sizes(k, 1);
    int extra = rng.uniform(0, budget - k);
    for (int i = 0; i < extra; ++i) {
        int p = rng.uniform(0, k - 1);
        if (sizes[p] < max_part) ++sizes[p];
    }
    return sizes;
}

RingSample gen_ring(std::uint64_t seed, int k, std::span<const int> sizes) {
    check_parts(k, sizes, 4);
    Rng rng(seed);
    auto start = part_starts(sizes);
    Graph g(start[k]);
    for (int i = 0; i < k; ++i) {
        for (int u = start[i]; u < start[i + 1]; ++u)
            for (int v = u + 1; v < start[i + 1]; ++v) g.add_edge(u, v);
        int j = (i + 1) % k;
        int reach = sizes[j];
        for (int a = 0; a < sizes[i]; ++a) {
            if (a > 0) reach = rng.uniform(1, reach);
            for (int b = 0; b < reach; ++b) g.add_edge(start[i] + a, start[j] + b);
        }
    }
    GoodPartition p;
    for (int i = 0; i < k; ++i) {
        p.parts.emplace_back();
        for (int v = start[i]; v < start[i + 1]; ++v) p.parts.back().push_back(v);
    }
    return {std::move(g), std::move(p)};
}

Graph gen_hyperhole(int k, std::span<const int> sizes) {
    check_parts(k, sizes, 4);
    return blow_up(k, sizes, [k](int i, int j) { return (j - i) % k == 1 || (i - j + k) % k == 1; });
}

Graph gen_hyperantihole(int k, std::span<const int> sizes) {
    check_parts(k, sizes, 4);
    return blow_up(k, sizes, [k](int i, int j) { return (j - i) % k != 1 && (i - j + k) % k != 1; });
}

Graph gen_chordal(std::uint64_t seed, int n, double density) {
    if (n < 1) throw std::invalid_argument("gen_chordal: n must be positive");
    Rng rng(seed);
    Graph g(n);
    for (int v = 1; v < n; ++v) {
        int u = rng.uniform(0, v - 1);
        std::vector<int> clique{u};
        VertexSet common = g.neighbors(u);
        std::vector<int> cands = common.to_vector();
        rng.shuffle(cands);
        for (int c : cands) {
            if (!common.contains(c) || !rng.chance(density)) continue;
            clique.push_back(c);
            common &= g.neighbors(c);
        }
        for (int c : clique) g.add_edge(v, c);
    }
    return g;
}

Graph gen_basic(Rng& rng, GraphClass c, int max_n) {
    if (max_n < 1) throw std::invalid_argument("gen_basic: max_n must be positive");
    switch (c) {
        case GraphClass::GU:
            return basic_gu(rng, max_n);
        case GraphClass::GT:
            return basic_gt(rng, max_n);
        case GraphClass::GUTCapFree:
            return basic_gutcap(rng, max_n);
        case GraphClass::GUT:
            return basic_gut(rng, max_n);
    }
    throw std::invalid_argument("unknown class");
}

Graph gen_class_member(std::uint64_t seed, GraphClass c, int pieces, int max_n) {
    if (pieces < 1 || max_n < 1) throw std::invalid_argument("gen_class_member: bad parameters");
    Rng rng(seed);
    for (int attempt = 0; attempt < 50; ++attempt) {
        int share = std::max(3, (max_n + 2 * (pieces - 1)) / pieces);
        Graph g = gen_basic(rng, c, std::min(max_n, rng.uniform(std::min(3, max_n), share + 2)));
        for (int p = 1; p < pieces; ++p) {
            int s = rng.uniform(0, 3);
            int room = max_n - g.order() + s;
            if (room < 1) break;
            Graph piece = gen_basic(rng, c, std::min(room, rng.uniform(1, share + 2)));
            auto k1 = random_clique(g, s, rng);
            auto k2 = random_clique(piece, s, rng);
            std::size_t shared = std::min(k1.size(), k2.size());
            if (g.order() + piece.order() - static_cast<int>(shared) > max_n) continue;
            std::vector<std::pair<int, int>> pairs;
            for (std::size_t i = 0; i < shared; ++i) pairs.emplace_back(k1[i], k2[i]);
            g = glue(g, piece, pairs).graph;
        }
        if (c == GraphClass::GUTCapFree && find_cap(g)) continue;
        return shuffle_labels(g, rng);
    }
    return shuffle_labels(gen_basic(rng, c, max_n), rng);
}

}  // namespace truemper
