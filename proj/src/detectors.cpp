#include "truemper/detectors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace truemper {

namespace {

struct KindName {
    ConfigKind kind;
    const char* name;
};

constexpr KindName kKindNames[] = {
    {ConfigKind::Hole, "Hole"},
    {ConfigKind::LongHole, "LongHole"},
    {ConfigKind::Theta, "Theta"},
    {ConfigKind::Pyramid, "Pyramid"},
    {ConfigKind::Prism, "Prism"},
    {ConfigKind::UniversalWheel, "UniversalWheel"},
    {ConfigKind::TwinWheel, "TwinWheel"},
    {ConfigKind::ProperWheel, "ProperWheel"},
    {ConfigKind::Cap, "Cap"},
    {ConfigKind::K23, "K23"},
    {ConfigKind::C6bar, "C6bar"},
    {ConfigKind::W54, "W54"},
    {ConfigKind::SevenAntihole, "SevenAntihole"},
};

bool in_range(const Graph& g, const std::vector<int>& vs) {
    for (int v : vs)
        if (v < 0 || v >= g.order()) return false;
    return true;
}

bool distinct(std::vector<int> vs) {
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

/// The induced edges on `vs` are exactly `expected`.
bool induces_exactly(const Graph& g, const std::vector<int>& vs, std::set<std::pair<int, int>> expected) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            int u = std::min(vs[i], vs[j]);
            int v = std::max(vs[i], vs[j]);
            bool want = expected.count({u, v}) > 0;
            if (g.adjacent(u, v) != want) return false;
        }
    return true;
}

void add_edge(std::set<std::pair<int, int>>& es, int u, int v) { es.insert({std::min(u, v), std::max(u, v)}); }

void add_path(std::set<std::pair<int, int>>& es, const std::vector<int>& p) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) add_edge(es, p[i], p[i + 1]);
}

bool check_three_paths(const Graph& g, const Certificate& c) {
    if (!c.paths) return false;
    const auto& ps = *c.paths;
    for (const auto& p : ps)
        if (p.size() < 2 || !in_range(g, p)) return false;
    std::set<std::pair<int, int>> es;
    std::vector<int> all;
    for (const auto& p : ps) add_path(es, p);

    auto interior = [](const std::vector<int>& p) { return std::vector<int>(p.begin() + 1, p.end() - 1); };

    if (c.kind == ConfigKind::Theta) {
        int a = ps[0].front(), b = ps[0].back();
        if (a == b) return false;
        for (const auto& p : ps)
            if (p.front() != a || p.back() != b || p.size() < 3) return false;
        all = {a, b};
        for (const auto& p : ps) {
            auto in = interior(p);
            all.insert(all.end(), in.begin(), in.end());
        }
    } else if (c.kind == ConfigKind::Pyramid) {
        int y = ps[0].back();
        int short_paths = 0;
        for (const auto& p : ps) {
            if (p.back() != y) return false;
            if (p.size() == 2) ++short_paths;
        }
        if (short_paths > 1) return false;
        all = {y};
        for (const auto& p : ps) {
            std::vector<int> body(p.begin(), p.end() - 1);
            all.insert(all.end(), body.begin(), body.end());
        }
        add_edge(es, ps[0].front(), ps[1].front());
        add_edge(es, ps[0].front(), ps[2].front());
        add_edge(es, ps[1].front(), ps[2].front());
    } else {
        for (const auto& p : ps) all.insert(all.end(), p.begin(), p.end());
        add_edge(es, ps[0].front(), ps[1].front());
        add_edge(es, ps[0].front(), ps[2].front());
        add_edge(es, ps[1].front(), ps[2].front());
        add_edge(es, ps[0].back(), ps[1].back());
        add_edge(es, ps[0].back(), ps[2].back());
        add_edge(es, ps[1].back(), ps[2].back());
    }
    if (!distinct(all)) return false;
    std::vector<int> sorted = all;
    std::sort(sorted.begin(), sorted.end());
    if (!c.vertices.empty() && c.vertices != sorted) return false;
    return induces_exactly(g, all, es);
}

bool pattern_adjacent(ConfigKind kind, int i, int j) {
    switch (kind) {
        case ConfigKind::K23:
            return (i < 2) != (j < 2);
        case ConfigKind::C6bar: {
            int d = (j - i + 6) % 6;
            return d != 1 && d != 5;
        }
        case ConfigKind::W54: {
            if (i == 5 || j == 5) return std::min(i, j) != 0;
            int d = (j - i + 5) % 5;
            return d == 1 || d == 4;
        }
        case ConfigKind::SevenAntihole: {
            int d = (j - i + 7) % 7;
            return d != 1 && d != 6;
        }
        default:
            throw std::invalid_argument("not a small pattern kind");
    }
}

int pattern_size(ConfigKind kind) {
    switch (kind) {
        case ConfigKind::K23:
            return 5;
        case ConfigKind::C6bar:
        case ConfigKind::W54:
            return 6;
        case ConfigKind::SevenAntihole:
            return 7;
        default:
            throw std::invalid_argument("find_small_obstruction: unsupported kind " + to_string(kind));
    }
}

bool check_pattern(const Graph& g, const Certificate& c) {
    int k = pattern_size(c.kind);
    if (static_cast<int>(c.vertices.size()) != k || !in_range(g, c.vertices) || !distinct(c.vertices)) return false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(c.vertices[i], c.vertices[j]) != pattern_adjacent(c.kind, i, j)) return false;
    return true;
}

/// Rim neighbours of x as positions on the hole.
std::vector<int> rim_positions(const Graph& g, const std::vector<int>& rim, int x) {
    std::vector<int> pos;
    for (std::size_t i = 0; i < rim.size(); ++i)
        if (g.adjacent(x, rim[i])) pos.push_back(static_cast<int>(i));
    return pos;
}

bool consecutive_triple(const std::vector<int>& pos, int k) {
    if (pos.size() != 3) return false;
    for (int s = 0; s < k; ++s) {
        std::vector<int> want = {s, (s + 1) % k, (s + 2) % k};
        std::sort(want.begin(), want.end());
        if (want == pos) return true;
    }
    return false;
}

/// BFS inside `allowed` from `src`; returns parents (-1 = unreached, src maps to itself).
std::vector<int> bfs_parents(const Graph& g, int src, const VertexSet& allowed) {
    std::vector<int> parent(g.order(), -1);
    parent[src] = src;
    std::deque<int> queue{src};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : g.neighbors(v) & allowed) {
            if (parent[u] != -1) continue;
            parent[u] = v;
            queue.push_back(u);
        }
    }
    return parent;
}

/// Path src..v following BFS parents.
std::vector<int> trace(const std::vector<int>& parent, int v) {
    std::vector<int> path{v};
    while (parent[v] != v) {
        v = parent[v];
        path.push_back(v);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<int> bfs_depths(const std::vector<int>& parent) {
    std::vector<int> depth(parent.size(), -1);
    std::function<int(int)> get = [&](int v) -> int {
        if (depth[v] != -1) return depth[v];
        return depth[v] = parent[v] == v ? 0 : get(parent[v]) + 1;
    };
    for (std::size_t v = 0; v < parent.size(); ++v)
        if (parent[v] != -1) get(static_cast<int>(v));
    return depth;
}

/// Among reached vertices in `targets`, the one nearest to the source (least index on ties).
int nearest(const std::vector<int>& depth, const VertexSet& targets) {
    int best = -1;
    for (int v : targets)
        if (depth[v] != -1 && (best == -1 || depth[v] < depth[best])) best = v;
    return best;
}

}  // namespace

std::string to_string(ConfigKind kind) {
    for (const auto& kn : kKindNames)
        if (kn.kind == kind) return kn.name;
    return "?";
}

std::optional<ConfigKind> config_kind_from_string(const std::string& name) {
    for (const auto& kn : kKindNames)
        if (name == kn.name) return kn.kind;
    return std::nullopt;
}

bool is_hole_order(const Graph& g, std::span<const int> cycle) {
    std::vector<int> vs(cycle.begin(), cycle.end());
    int k = static_cast<int>(vs.size());
    if (k < 4 || !in_range(g, vs) || !distinct(vs)) return false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if (g.adjacent(vs[i], vs[j]) != consecutive) return false;
        }
    return true;
}

std::vector<int> canonical_cycle(std::vector<int> cycle) {
    auto least = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), least, cycle.end());
    if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
    return cycle;
}

bool check_certificate(const Graph& g, const Certificate& c) {
    switch (c.kind) {
        case ConfigKind::Hole:
            return !c.center && is_hole_order(g, c.vertices);
        case ConfigKind::LongHole:
            return !c.center && c.vertices.size() >= 5 && is_hole_order(g, c.vertices);
        case ConfigKind::Theta:
        case ConfigKind::Pyramid:
        case ConfigKind::Prism:
            return check_three_paths(g, c);
        case ConfigKind::UniversalWheel:
        case ConfigKind::TwinWheel:
        case ConfigKind::ProperWheel:
        case ConfigKind::Cap: {
            if (!c.center || !is_hole_order(g, c.vertices)) return false;
            int x = *c.center;
            if (x < 0 || x >= g.order()) return false;
            if (std::find(c.vertices.begin(), c.vertices.end(), x) != c.vertices.end()) return false;
            int k = static_cast<int>(c.vertices.size());
            auto pos = rim_positions(g, c.vertices, x);
            int d = static_cast<int>(pos.size());
            if (c.kind == ConfigKind::Cap) return pos == std::vector<int>{0, 1};
            if (d < 3) return false;
            bool universal = d == k;
            bool twin = consecutive_triple(pos, k);
            if (c.kind == ConfigKind::UniversalWheel) return universal;
            if (c.kind == ConfigKind::TwinWheel) return twin;
            return !universal && !twin;
        }
        case ConfigKind::K23:
        case ConfigKind::C6bar:
        case ConfigKind::W54:
        case ConfigKind::SevenAntihole:
            return check_pattern(g, c);
    }
    return false;
}

std::optional<Certificate> find_long_hole(const Graph& g) {
    int n = g.order();
    for (int b = 0; b < n; ++b) {
        for (int c : g.neighbors(b)) {
            VertexSet nb = g.closed_neighborhood(b);
            VertexSet nc = g.closed_neighborhood(c);
            VertexSet as = g.neighbors(b) - nc;
            VertexSet ds = g.neighbors(c) - nb;
            if (as.empty() || ds.empty()) continue;
            VertexSet free = g.vertices() - nb - nc;
            for (int a : as) {
                VertexSet allowed = free;
                allowed.insert(a);
                auto parent = bfs_parents(g, a, allowed);
                auto depth = bfs_depths(parent);
                for (int d : ds) {
                    if (g.adjacent(a, d)) continue;
                    int q = nearest(depth, g.neighbors(d) & allowed);
                    if (q == -1) continue;
                    std::vector<int> cycle{b, c, d};
                    auto path = trace(parent, q);
                    cycle.insert(cycle.end(), path.rbegin(), path.rend());
                    return Certificate{ConfigKind::LongHole, canonical_cycle(cycle), std::nullopt, std::nullopt};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<Certificate> find_cap(const Graph& g) {
    int n = g.order();
    for (int x = 0; x < n; ++x) {
        for (int y : g.neighbors(x)) {
            if (y < x) continue;
            VertexSet nx = g.closed_neighborhood(x);
            VertexSet ny = g.closed_neighborhood(y);
            for (int c : g.neighbors(x) & g.neighbors(y)) {
                VertexSet nc = g.closed_neighborhood(c);
                VertexSet as = g.neighbors(x) - ny - nc;
                VertexSet bs = g.neighbors(y) - nx - nc;
                if (as.empty() || bs.empty()) continue;
                VertexSet free = g.vertices() - nx - ny - nc;
                for (int a : as) {
                    VertexSet allowed = free;
                    allowed.insert(a);
                    auto parent = bfs_parents(g, a, allowed);
                    auto depth = bfs_depths(parent);
                    for (int b : bs) {
                        int q = nearest(depth, g.neighbors(b) & allowed);
                        if (q == -1) continue;
                        std::vector<int> hole{x, y, b};
                        auto path = trace(parent, q);
                        hole.insert(hole.end(), path.rbegin(), path.rend());
                        return Certificate{ConfigKind::Cap, hole, c, std::nullopt};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<Certificate> find_small_obstruction(const Graph& g, ConfigKind kind) {
    int k = pattern_size(kind);
    int n = g.order();
    if (n < k) return std::nullopt;
    std::vector<int> pdeg(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && pattern_adjacent(kind, i, j)) ++pdeg[i];

    std::vector<int> chosen;
    std::function<bool(const VertexSet&)> extend = [&](const VertexSet& used) -> bool {
        int pos = static_cast<int>(chosen.size());
        if (pos == k) return true;
        VertexSet cand = g.vertices() - used;
        for (int j = 0; j < pos; ++j) {
            if (pattern_adjacent(kind, j, pos))
                cand &= g.neighbors(chosen[j]);
            else
                cand -= g.neighbors(chosen[j]);
        }
        for (int v : cand) {
            if (g.degree(v) < pdeg[pos]) continue;
            chosen.push_back(v);
            VertexSet next = used;
            next.insert(v);
            if (extend(next)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!extend(g.empty_set())) return std::nullopt;
    return Certificate{kind, chosen, std::nullopt, std::nullopt};
}

VertexSet HoleExpansion::star() const {
    VertexSet s(universal.universe());
    for (const auto& x : twin_sets) s |= x;
    return s;
}

HoleExpansion hole_expansion(const Graph& g, std::span<const int> hole) {
    if (!is_hole_order(g, hole)) throw std::invalid_argument("hole_expansion: not a hole");
    VertexSet h = VertexSet::from(g.order(), hole);
    HoleExpansion out{std::vector<int>(hole.begin(), hole.end()), {}, g.empty_set()};
    std::vector<VertexSet> traces;
    for (int x : hole) {
        out.twin_sets.emplace_back(g.order());
        out.twin_sets.back().insert(x);
        traces.push_back(g.closed_neighborhood(x) & h);
    }
    for (int v : g.vertices() - h) {
        VertexSet t = g.closed_neighborhood(v) & h;
        if (t == h) {
            out.universal.insert(v);
            continue;
        }
        for (std::size_t i = 0; i < traces.size(); ++i)
            if (t == traces[i]) out.twin_sets[i].insert(v);
    }
    return out;
}

HoleExpansion hole_expansion(const Graph& g, const Certificate& hole) {
    if (hole.kind != ConfigKind::Hole && hole.kind != ConfigKind::LongHole)
        throw std::invalid_argument("hole_expansion: certificate is not a hole");
    return hole_expansion(g, hole.vertices);
}

}  // namespace truemper
