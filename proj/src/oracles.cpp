#include "truemper/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "truemper/rings.hpp"

namespace truemper {

namespace {

using Mask = std::uint32_t;

void require_size(const Graph& g, int limit, const char* who) {
    if (g.order() > limit)
        throw std::length_error(std::string(who) + ": " + std::to_string(g.order()) + " vertices exceeds limit " +
                                std::to_string(limit));
}

std::vector<Mask> masks(const Graph& g) {
    std::vector<Mask> adj(g.order(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= Mask{1} << v;
        adj[v] |= Mask{1} << u;
    }
    return adj;
}

Mask bit(int v) { return Mask{1} << v; }

bool connected_mask(const std::vector<Mask>& adj, Mask s) {
    if (!s) return true;
    Mask seen = s & (~s + 1);
    Mask frontier = seen;
    while (frontier) {
        Mask grow = 0;
        for (Mask f = frontier; f; f &= f - 1) grow |= adj[std::countr_zero(f)];
        grow &= s & ~seen;
        seen |= grow;
        frontier = grow;
    }
    return seen == s;
}

/// Maximal cliques of the vertices in `cand` (Bron–Kerbosch with pivoting).
void maximal_cliques(const std::vector<Mask>& adj, Mask r, Mask p, Mask x, const std::function<void(Mask)>& report) {
    if (!p && !x) {
        report(r);
        return;
    }
    Mask px = p | x;
    int pivot = std::countr_zero(px);
    int best = -1;
    for (Mask t = px; t; t &= t - 1) {
        int u = std::countr_zero(t);
        int c = std::popcount(p & adj[u]);
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    for (Mask t = p & ~adj[pivot]; t; t &= t - 1) {
        int v = std::countr_zero(t);
        maximal_cliques(adj, r | bit(v), p & adj[v], x & adj[v], report);
        p &= ~bit(v);
        x |= bit(v);
    }
}

VertexSet to_set(Mask m, int n) {
    VertexSet s(n);
    for (; m; m &= m - 1) s.insert(std::countr_zero(m));
    return s;
}

std::vector<int> cycle_in_order(const std::vector<Mask>& adj, Mask s) {
    int start = std::countr_zero(s);
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (true) {
        Mask nb = adj[cur] & s;
        if (prev != -1) nb &= ~bit(prev);
        int next = std::countr_zero(nb);
        if (next == start) break;
        order.push_back(next);
        prev = cur;
        cur = next;
        if (static_cast<int>(order.size()) > std::popcount(s)) break;
    }
    return order;
}

struct Scanner {
    const Graph& g;
    std::vector<Mask> adj;
    std::vector<char> hole;

    explicit Scanner(const Graph& graph) : g(graph), adj(masks(graph)) {
        int n = g.order();
        hole.assign(std::size_t{1} << n, 0);
        for (Mask s = 1; s < (Mask{1} << n); ++s) {
            if (std::popcount(s) < 4) continue;
            bool ok = true;
            for (Mask t = s; t && ok; t &= t - 1)
                if (std::popcount(adj[std::countr_zero(t)] & s) != 2) ok = false;
            hole[s] = ok && connected_mask(adj, s);
        }
    }

    int degree_in(int v, Mask s) const { return std::popcount(adj[v] & s); }

    /// Walk from `from` through `first` along degree-2 vertices until a vertex in `stop`.
    std::vector<int> walk(Mask s, int from, int first, Mask stop) const {
        std::vector<int> path{from, first};
        int prev = from, cur = first;
        while (!(bit(cur) & stop)) {
            Mask nb = adj[cur] & s & ~bit(prev);
            if (std::popcount(nb) != 1) return {};
            prev = cur;
            cur = std::countr_zero(nb);
            path.push_back(cur);
            if (path.size() > 32) return {};
        }
        return path;
    }

    std::optional<Certificate> three_path(Mask s, ConfigKind kind) const {
        int need = kind == ConfigKind::Theta ? 2 : kind == ConfigKind::Pyramid ? 4 : 6;
        Mask branch = 0;
        int edges2 = 0;
        for (Mask t = s; t; t &= t - 1) {
            int v = std::countr_zero(t);
            int d = degree_in(v, s);
            edges2 += d;
            if (d == 3)
                branch |= bit(v);
            else if (d != 2)
                return std::nullopt;
        }
        if (std::popcount(branch) != need || edges2 / 2 != std::popcount(s) + need / 2) return std::nullopt;
        if (!connected_mask(adj, s)) return std::nullopt;

        std::vector<int> bs;
        for (Mask t = branch; t; t &= t - 1) bs.push_back(std::countr_zero(t));
        std::vector<int> sorted;
        for (Mask t = s; t; t &= t - 1) sorted.push_back(std::countr_zero(t));

        auto attempt = [&](std::array<std::vector<int>, 3> paths) -> std::optional<Certificate> {
            for (const auto& p : paths)
                if (p.empty()) return std::nullopt;
            Certificate c{kind, sorted, std::nullopt, paths};
            if (check_certificate(g, c)) return c;
            return std::nullopt;
        };

        if (kind == ConfigKind::Theta) {
            int a = bs[0];
            std::array<std::vector<int>, 3> paths;
            int i = 0;
            for (Mask t = adj[a] & s; t; t &= t - 1) paths[i++] = walk(s, a, std::countr_zero(t), branch);
            return attempt(paths);
        }
        if (kind == ConfigKind::Pyramid) {
            for (int y : bs) {
                Mask tri = branch & ~bit(y);
                std::array<std::vector<int>, 3> paths;
                int i = 0;
                for (Mask t = adj[y] & s; t; t &= t - 1) {
                    auto p = walk(s, y, std::countr_zero(t), tri);
                    std::reverse(p.begin(), p.end());
                    paths[i++] = p;
                }
                if (auto c = attempt(paths)) return c;
            }
            return std::nullopt;
        }
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                for (int k = j + 1; k < 6; ++k) {
                    Mask t1 = bit(bs[i]) | bit(bs[j]) | bit(bs[k]);
                    Mask t2 = branch & ~t1;
                    std::array<std::vector<int>, 3> paths;
                    int p = 0;
                    for (Mask t = t1; t; t &= t - 1) {
                        int x = std::countr_zero(t);
                        Mask out = adj[x] & s & ~t1;
                        if (std::popcount(out) != 1) break;
                        paths[p++] = walk(s, x, std::countr_zero(out), t2);
                    }
                    if (p == 3)
                        if (auto c = attempt(paths)) return c;
                }
        return std::nullopt;
    }

    /// Wheels and caps: S minus one vertex is a hole.
    std::vector<Certificate> attachments(Mask s) const {
        std::vector<Certificate> out;
        for (Mask t = s; t; t &= t - 1) {
            int x = std::countr_zero(t);
            Mask rest = s & ~bit(x);
            if (!hole[rest]) continue;
            int d = degree_in(x, rest);
            auto rim = cycle_in_order(adj, rest);
            int k = static_cast<int>(rim.size());
            if (d == 2) {
                for (int i = 0; i < k; ++i) {
                    if (g.adjacent(x, rim[i]) && g.adjacent(x, rim[(i + 1) % k])) {
                        std::rotate(rim.begin(), rim.begin() + i, rim.end());
                        out.push_back({ConfigKind::Cap, rim, x, std::nullopt});
                        break;
                    }
                }
            } else if (d >= 3) {
                for (ConfigKind kind : {ConfigKind::UniversalWheel, ConfigKind::TwinWheel, ConfigKind::ProperWheel}) {
                    Certificate c{kind, rim, x, std::nullopt};
                    if (check_certificate(g, c)) out.push_back(c);
                }
            }
        }
        return out;
    }

    std::vector<Certificate> classify(Mask s, const std::set<ConfigKind>& want) const {
        std::vector<Certificate> out;
        for (ConfigKind k : {ConfigKind::Theta, ConfigKind::Pyramid, ConfigKind::Prism})
            if (want.count(k))
                if (auto c = three_path(s, k)) out.push_back(*c);
        if (want.count(ConfigKind::UniversalWheel) || want.count(ConfigKind::TwinWheel) ||
            want.count(ConfigKind::ProperWheel) || want.count(ConfigKind::Cap))
            for (auto& c : attachments(s))
                if (want.count(c.kind)) out.push_back(c);
        return out;
    }
};

const std::set<ConfigKind> kTruemperKinds = {ConfigKind::Theta,          ConfigKind::Pyramid,   ConfigKind::Prism,
                                             ConfigKind::UniversalWheel, ConfigKind::TwinWheel, ConfigKind::ProperWheel,
                                             ConfigKind::Cap};

}  // namespace

int brute_chi(const Graph& g, int limit) {
    require_size(g, std::min(limit, 31), "brute_chi");
    int n = g.order();
    auto adj = masks(g);
    int lower = brute_omega(g);

    std::vector<int> color(n, 0);
    int best = n;
    std::function<void(int, int)> search = [&](int colored, int used) {
        if (used >= best) return;
        if (colored == n) {
            best = used;
            return;
        }
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v]) continue;
            Mask seen = 0;
            int deg = 0;
            for (Mask t = adj[v]; t; t &= t - 1) {
                int u = std::countr_zero(t);
                if (color[u])
                    seen |= bit(color[u]);
                else
                    ++deg;
            }
            int sat = std::popcount(seen);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        for (int c = 1; c <= used + 1 && c < best; ++c) {
            bool clash = false;
            for (Mask t = adj[pick]; t; t &= t - 1)
                if (color[std::countr_zero(t)] == c) clash = true;
            if (clash) continue;
            color[pick] = c;
            search(colored + 1, std::max(used, c));
            color[pick] = 0;
            if (best == lower) return;
        }
    };
    search(0, 0);
    return best;
}

WeightedOptimum brute_omega_w(const WeightedGraph& wg) {
    require_size(wg.graph, kCliqueLimit, "brute_omega_w");
    int n = wg.graph.order();
    auto adj = masks(wg.graph);
    Mask positive = 0;
    for (int v = 0; v < n; ++v)
        if (wg.weights[v] > 0) positive |= bit(v);
    WeightedOptimum best{VertexSet(n), 0};
    if (!positive) return best;
    maximal_cliques(adj, 0, positive, 0, [&](Mask c) {
        double w = 0;
        for (Mask t = c; t; t &= t - 1) w += wg.weights[std::countr_zero(t)];
        if (w > best.value) best = {to_set(c, n), w};
    });
    return best;
}

WeightedOptimum brute_alpha_w(const WeightedGraph& wg) {
    return brute_omega_w(WeightedGraph(complement(wg.graph), wg.weights));
}

int brute_omega(const Graph& g) { return static_cast<int>(brute_omega_w(WeightedGraph(g)).value); }

std::optional<Certificate> truemper_scan(const Graph& g, std::span<const ConfigKind> forbid) {
    require_size(g, kScanLimit, "truemper_scan");
    std::set<ConfigKind> want;
    for (ConfigKind k : forbid)
        if (kTruemperKinds.count(k)) want.insert(k);
    Scanner scan(g);
    for (Mask s = 1; s < (Mask{1} << g.order()); ++s) {
        if (std::popcount(s) < 4) continue;
        auto found = scan.classify(s, want);
        if (!found.empty()) {
            return *std::min_element(found.begin(), found.end(),
                                     [](const Certificate& a, const Certificate& b) { return a.kind < b.kind; });
        }
    }
    return std::nullopt;
}

std::set<ConfigKind> truemper_kinds(const Graph& g) {
    require_size(g, kScanLimit, "truemper_kinds");
    std::set<ConfigKind> out;
    Scanner scan(g);
    for (Mask s = 1; s < (Mask{1} << g.order()); ++s) {
        if (std::popcount(s) < 4) continue;
        for (auto& c : scan.classify(s, kTruemperKinds)) out.insert(c.kind);
        if (out.size() == kTruemperKinds.size()) break;
    }
    return out;
}

std::vector<std::vector<int>> brute_holes(const Graph& g) {
    require_size(g, kScanLimit, "brute_holes");
    Scanner scan(g);
    std::vector<std::vector<int>> out;
    for (Mask s = 1; s < (Mask{1} << g.order()); ++s)
        if (scan.hole[s]) out.push_back(cycle_in_order(scan.adj, s));
    return out;
}

bool brute_is_ring(const Graph& g) {
    require_size(g, kRingLimit, "brute_is_ring");
    int n = g.order();
    auto adj = masks(g);
    std::vector<Mask> blocks;
    std::function<bool(int)> place = [&](int v) -> bool {
        if (v == n) {
            int k = static_cast<int>(blocks.size());
            if (k < 4) return false;
            Graph q(k);
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) {
                    bool linked = false;
                    for (Mask t = blocks[i]; t; t &= t - 1)
                        if (adj[std::countr_zero(t)] & blocks[j]) linked = true;
                    if (linked) q.add_edge(i, j);
                }
            if (!is_hole(q)) return false;
            GoodPartition p;
            std::vector<int> order{0};
            for (int prev = -1, cur = 0;;) {
                int next = -1;
                for (int u : q.neighbors(cur))
                    if (u != prev) {
                        next = u;
                        break;
                    }
                if (next == 0) break;
                order.push_back(next);
                prev = cur;
                cur = next;
            }
            for (int b : order) p.parts.push_back(to_set(blocks[b], n).to_vector());
            return verify_good_partition(g, p);
        }
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if ((blocks[b] & adj[v]) != blocks[b]) continue;
            blocks[b] |= bit(v);
            if (place(v + 1)) return true;
            blocks[b] &= ~bit(v);
        }
        blocks.push_back(bit(v));
        if (place(v + 1)) return true;
        blocks.pop_back();
        return false;
    };
    return place(0);
}

bool brute_has_clique_cutset(const Graph& g) {
    require_size(g, kChiLimit, "brute_has_clique_cutset");
    int n = g.order();
    auto adj = masks(g);
    Mask all = (n == 32) ? ~Mask{0} : (Mask{1} << n) - 1;
    std::function<bool(Mask, Mask)> grow = [&](Mask clique, Mask cand) -> bool {
        Mask rest = all & ~clique;
        if (rest && !connected_mask(adj, rest)) return true;
        for (Mask t = cand; t; t &= t - 1) {
            int v = std::countr_zero(t);
            Mask later = cand & ~((bit(v) << 1) - 1);
            if (grow(clique | bit(v), later & adj[v])) return true;
        }
        return false;
    };
    return grow(0, all);
}

int brute_weighted_cycle_chi(int k, std::span<const int> mult) {
    if (k < 3 || static_cast<int>(mult.size()) != k) throw std::invalid_argument("brute_weighted_cycle_chi: bad input");
    std::vector<int> start(k + 1, 0);
    for (int i = 0; i < k; ++i) {
        if (mult[i] < 1) throw std::invalid_argument("brute_weighted_cycle_chi: multiplicities must be positive");
        start[i + 1] = start[i] + mult[i];
    }
    Graph g(start[k]);
    for (int i = 0; i < k; ++i) {
        int j = (i + 1) % k;
        for (int u = start[i]; u < start[i + 1]; ++u) {
            for (int v = u + 1; v < start[i + 1]; ++v) g.add_edge(u, v);
            for (int v = start[j]; v < start[j + 1]; ++v)
                if (!g.adjacent(u, v)) g.add_edge(u, v);
        }
    }
    return brute_chi(g);
}

}  // namespace truemper
