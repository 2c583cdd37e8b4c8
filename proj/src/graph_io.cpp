#include "truemper/graph_io.hpp"

#include <charconv>
#include <cmath>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace truemper {

namespace {

std::vector<std::string> split(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

long long parse_int(const std::string& tok, int line) {
    long long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) throw ParseError(line, "expected integer, got '" + tok + "'");
    return v;
}

double parse_real(const std::string& tok, int line) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(tok, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != tok.size() || !std::isfinite(v)) throw ParseError(line, "expected number, got '" + tok + "'");
    return v;
}

}  // namespace

WeightedGraph read_graph(std::istream& in) {
    std::string raw;
    int line = 0;
    std::optional<Graph> g;
    std::vector<double> w;
    long long declared_m = 0;
    int seen_m = 0;
    std::set<std::pair<int, int>> seen;
    std::vector<bool> weighted;

    auto vertex = [&](const std::string& tok) {
        long long v = parse_int(tok, line);
        if (v < 1 || v > g->order()) throw ParseError(line, "vertex " + tok + " out of range");
        return static_cast<int>(v - 1);
    };

    while (std::getline(in, raw)) {
        ++line;
        auto toks = split(raw);
        if (toks.empty() || toks[0][0] == '#') continue;
        const std::string& tag = toks[0];
        if (tag == "p") {
            if (g) throw ParseError(line, "duplicate problem line");
            if (toks.size() != 3) throw ParseError(line, "expected 'p <n> <m>'");
            long long n = parse_int(toks[1], line);
            declared_m = parse_int(toks[2], line);
            if (n < 1) throw ParseError(line, "graph must have at least one vertex");
            if (n > 1000000) throw ParseError(line, "vertex count too large");
            if (declared_m < 0) throw ParseError(line, "negative edge count");
            g.emplace(static_cast<int>(n));
            w.assign(n, 1.0);
            weighted.assign(n, false);
        } else if (tag == "e") {
            if (!g) throw ParseError(line, "edge before problem line");
            if (toks.size() != 3) throw ParseError(line, "expected 'e <u> <v>'");
            int u = vertex(toks[1]);
            int v = vertex(toks[2]);
            if (u == v) throw ParseError(line, "self-loop at vertex " + toks[1]);
            if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
                throw ParseError(line, "duplicate edge " + toks[1] + " " + toks[2]);
            g->add_edge(u, v);
            ++seen_m;
        } else if (tag == "w") {
            if (!g) throw ParseError(line, "weight before problem line");
            if (toks.size() != 3) throw ParseError(line, "expected 'w <v> <weight>'");
            int v = vertex(toks[1]);
            if (weighted[v]) throw ParseError(line, "duplicate weight for vertex " + toks[1]);
            weighted[v] = true;
            w[v] = parse_real(toks[2], line);
        } else {
            throw ParseError(line, "unknown line type '" + tag + "'");
        }
    }
    if (!g) throw ParseError(line, "missing problem line");
    if (seen_m != declared_m)
        throw ParseError(line, "declared " + std::to_string(declared_m) + " edges, found " + std::to_string(seen_m));
    return {std::move(*g), std::move(w)};
}

WeightedGraph read_graph_string(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

std::string format_weight(double w) {
    if (w == std::floor(w) && std::fabs(w) < 1e15) return std::to_string(static_cast<long long>(w));
    std::ostringstream ss;
    ss.precision(17);
    ss << w;
    return ss.str();
}

void write_graph(std::ostream& out, const Graph& g) {
    auto edges = g.edges();
    out << "p " << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

void write_graph(std::ostream& out, const WeightedGraph& g) {
    write_graph(out, g.graph);
    for (int v = 0; v < g.graph.order(); ++v)
        if (g.weights[v] != 1.0) out << "w " << v + 1 << ' ' << format_weight(g.weights[v]) << '\n';
}

}  // namespace truemper
