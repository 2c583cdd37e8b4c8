#include "truemper/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace truemper {

Graph::Graph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph must have at least one vertex");
    adj_.assign(n, VertexSet(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

int Graph::edge_count() const {
    int twice = 0;
    for (const auto& a : adj_) twice += a.size();
    return twice / 2;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[u].insert(v);
    adj_[v].insert(u);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u].erase(v);
    adj_[v].erase(u);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u); v != -1; v = adj_[u].next(v)) out.emplace_back(u, v);
    return out;
}

WeightedGraph::WeightedGraph(Graph g, std::vector<double> w) : graph(std::move(g)), weights(std::move(w)) {
    if (static_cast<int>(weights.size()) != graph.order())
        throw std::invalid_argument("weight vector size does not match vertex count");
}

WeightedGraph::WeightedGraph(Graph g) : graph(std::move(g)), weights(graph.order(), 1.0) {}

VertexSet InducedSubgraph::lift(const VertexSet& local, int universe) const {
    VertexSet out(universe);
    for (int v : local) out.insert(labels[v]);
    return out;
}

std::vector<int> InducedSubgraph::lift(const std::vector<int>& local) const {
    std::vector<int> out;
    out.reserve(local.size());
    for (int v : local) out.push_back(labels[v]);
    return out;
}

int Coloring::count() const {
    std::set<int> used(color.begin(), color.end());
    return static_cast<int>(used.size());
}

Graph complement(const Graph& g) {
    Graph h(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) h.add_edge(u, v);
    return h;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
    std::vector<VertexSet> out;
    VertexSet left = within;
    while (!left.empty()) {
        VertexSet comp(g.order());
        VertexSet frontier(g.order());
        frontier.insert(left.first());
        while (!frontier.empty()) {
            comp |= frontier;
            VertexSet grow(g.order());
            for (int v : frontier) grow |= g.neighbors(v);
            grow &= left;
            grow -= comp;
            frontier = grow;
        }
        left -= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

std::vector<VertexSet> anticomponents(const Graph& g, const VertexSet& within) {
    std::vector<VertexSet> out;
    VertexSet left = within;
    while (!left.empty()) {
        VertexSet comp(g.order());
        VertexSet frontier(g.order());
        frontier.insert(left.first());
        while (!frontier.empty()) {
            comp |= frontier;
            VertexSet grow(g.order());
            for (int v : frontier) grow |= g.closed_neighborhood(v).complement();
            grow &= left;
            grow -= comp;
            frontier = grow;
        }
        left -= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<VertexSet> anticomponents(const Graph& g) { return anticomponents(g, g.vertices()); }

bool is_connected(const Graph& g) { return components(g).size() == 1; }

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("induced subgraph on empty vertex set");
    std::vector<int> labels = s.to_vector();
    std::vector<int> local(g.order(), -1);
    for (std::size_t i = 0; i < labels.size(); ++i) local[labels[i]] = static_cast<int>(i);
    Graph h(static_cast<int>(labels.size()));
    for (std::size_t i = 0; i < labels.size(); ++i) {
        VertexSet nb = g.neighbors(labels[i]) & s;
        for (int u : nb)
            if (local[u] > static_cast<int>(i)) h.add_edge(static_cast<int>(i), local[u]);
    }
    return {std::move(h), std::move(labels)};
}

WeightedGraph induced_subgraph(const WeightedGraph& g, const InducedSubgraph& sub) {
    std::vector<double> w;
    w.reserve(sub.labels.size());
    for (int v : sub.labels) w.push_back(g.weights[v]);
    return {sub.graph, std::move(w)};
}

bool dominates(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("dominates requires distinct vertices");
    return g.closed_neighborhood(v).is_subset_of(g.closed_neighborhood(u));
}

TwinPartition true_twin_partition(const Graph& g) {
    int n = g.order();
    std::vector<int> part_of(n, -1);
    std::vector<std::vector<int>> parts;
    for (int v = 0; v < n; ++v) {
        if (part_of[v] != -1) continue;
        VertexSet nv = g.closed_neighborhood(v);
        int id = static_cast<int>(parts.size());
        parts.emplace_back();
        for (int u : nv) {
            if (part_of[u] == -1 && g.closed_neighborhood(u) == nv) {
                part_of[u] = id;
                parts[id].push_back(u);
            }
        }
    }
    Graph q(static_cast<int>(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            if (g.adjacent(parts[i][0], parts[j][0])) q.add_edge(static_cast<int>(i), static_cast<int>(j));
    return {std::move(parts), std::move(part_of), std::move(q)};
}

bool alpha_at_most_2(const Graph& g) {
    int n = g.order();
    for (int u = 0; u < n; ++u) {
        VertexSet non_u = g.closed_neighborhood(u).complement();
        for (int v = non_u.next(u); v != -1; v = non_u.next(v)) {
            VertexSet common = non_u - g.closed_neighborhood(v);
            if (common.next(v) != -1) return false;
        }
    }
    return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
    for (int v : s) {
        VertexSet rest = s;
        rest.erase(v);
        if (!rest.is_subset_of(g.neighbors(v))) return false;
    }
    return true;
}

bool is_stable(const Graph& g, const VertexSet& s) {
    for (int v : s)
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

bool is_complete_to(const Graph& g, int v, const VertexSet& s) {
    VertexSet rest = s;
    rest.erase(v);
    return rest.is_subset_of(g.neighbors(v));
}

bool is_proper_coloring(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.color.size()) != g.order()) return false;
    for (int x : c.color)
        if (x < 1) return false;
    for (auto [u, v] : g.edges())
        if (c.color[u] == c.color[v]) return false;
    return true;
}

bool is_hole(const Graph& g) {
    if (g.order() < 4) return false;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2) return false;
    return is_connected(g);
}

double weight_of(const std::vector<double>& w, const VertexSet& s) {
    double total = 0;
    for (int v : s) total += w[v];
    return total;
}

}  // namespace truemper
