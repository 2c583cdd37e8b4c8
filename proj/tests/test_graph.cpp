#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "support.hpp"
#include "truemper/graph_io.hpp"
#include "truemper/oracles.hpp"

using namespace truemper;
using namespace truemper::testing;

namespace {

std::vector<int> sizes_of(const std::vector<VertexSet>& sets) {
    std::vector<int> s;
    for (const auto& x : sets) s.push_back(x.size());
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

TEST_CASE("graph rejects empty and self-loops") {
    CHECK_THROWS(Graph(0));
    Graph g(3);
    CHECK_THROWS(g.add_edge(1, 1));
    CHECK_THROWS(g.add_edge(0, 3));
    g.add_edge(0, 1);
    CHECK(g.adjacent(1, 0));
    CHECK(g.edge_count() == 1);
}

TEST_CASE("complement") {
    auto c5 = cycle_graph(5);
    auto cc = complement(c5);
    CHECK(cc.edge_count() == 5);
    CHECK(is_hole(cc));
    CHECK(complement(complete_graph(3)).edge_count() == 0);
    auto prism = complement(cycle_graph(6));
    CHECK(prism.edge_count() == 9);
    for (int v = 0; v < 6; ++v) CHECK(prism.degree(v) == 3);
}

TEST_CASE("components and anticomponents") {
    auto two_k2 = make_graph(4, {{0, 1}, {2, 3}});
    CHECK(sizes_of(components(two_k2)) == std::vector<int>{2, 2});
    CHECK(sizes_of(components(cycle_graph(5))) == std::vector<int>{5});
    CHECK(sizes_of(components(edgeless_graph(4))) == std::vector<int>{1, 1, 1, 1});

    auto c4 = anticomponents(cycle_graph(4));
    REQUIRE(c4.size() == 2);
    CHECK(c4[0].to_vector() == std::vector<int>{0, 2});
    CHECK(c4[1].to_vector() == std::vector<int>{1, 3});
    CHECK(anticomponents(complete_graph(5)).size() == 5);
    CHECK(anticomponents(cycle_graph(5)).size() == 1);
}

TEST_CASE("anticomponents are components of the complement and pairwise complete") {
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        auto g = random_graph(rng, rng.uniform(1, 9), rng.real());
        auto a = anticomponents(g);
        CHECK(a == components(complement(g)));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = i + 1; j < a.size(); ++j)
                for (int u : a[i])
                    for (int v : a[j]) CHECK(g.adjacent(u, v));
    }
}

TEST_CASE("induced subgraph") {
    auto c5 = cycle_graph(5);
    auto p3 = induced_subgraph(c5, VertexSet(5, {1, 2, 3}));
    CHECK(p3.graph == path_graph(3));
    CHECK(p3.labels == std::vector<int>{1, 2, 3});
    CHECK(induced_subgraph(complete_graph(4), VertexSet(4, {0, 3})).graph == complete_graph(2));
    CHECK(induced_subgraph(cycle_graph(6), VertexSet(6, {0, 2, 4})).graph.edge_count() == 0);
    CHECK_THROWS(induced_subgraph(c5, VertexSet(5)));
}

TEST_CASE("dominates") {
    auto k3 = complete_graph(3);
    CHECK(dominates(k3, 0, 1));
    CHECK(dominates(k3, 1, 0));
    auto p3 = path_graph(3);
    CHECK(dominates(p3, 1, 0));
    CHECK_FALSE(dominates(p3, 0, 1));
    CHECK_FALSE(dominates(cycle_graph(4), 0, 2));
    CHECK_THROWS(dominates(k3, 1, 1));
}

TEST_CASE("true twin partition") {
    auto kn = true_twin_partition(complete_graph(4));
    CHECK(kn.parts.size() == 1);
    CHECK(kn.quotient.order() == 1);

    auto c5 = true_twin_partition(cycle_graph(5));
    CHECK(c5.parts.size() == 5);
    CHECK(is_hole(c5.quotient));

    std::vector<int> sizes{2, 1, 1, 1, 1};
    auto blown = true_twin_partition(gen_hyperhole(5, sizes));
    std::vector<int> got;
    for (const auto& p : blown.parts) got.push_back(static_cast<int>(p.size()));
    CHECK(got == std::vector<int>{2, 1, 1, 1, 1});
    CHECK(is_hole(blown.quotient));
}

TEST_CASE("twin classes are cliques and expand back to the graph") {
    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        auto g = random_graph(rng, rng.uniform(1, 9), rng.real());
        auto tp = true_twin_partition(g);
        for (const auto& part : tp.parts) CHECK(is_clique(g, VertexSet::from(g.order(), part)));
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v) {
                int pu = tp.part_of[u], pv = tp.part_of[v];
                bool expected = pu == pv || tp.quotient.adjacent(pu, pv);
                CHECK(g.adjacent(u, v) == expected);
            }
    }
}

TEST_CASE("alpha at most two") {
    CHECK(alpha_at_most_2(complete_graph(5)));
    CHECK(alpha_at_most_2(cycle_graph(5)));
    CHECK_FALSE(alpha_at_most_2(k23()));
    Rng rng(3);
    for (int t = 0; t < 300; ++t) {
        auto g = random_graph(rng, rng.uniform(1, 8), rng.real());
        CHECK(alpha_at_most_2(g) == (brute_alpha_w(WeightedGraph(g)).value <= 2));
    }
}

TEST_CASE("graph text format round trip") {
    auto wg = read_graph_string("# triangle\np 3 3\ne 1 2\ne 2 3\ne 1 3\nw 2 -1.5\n");
    CHECK(wg.graph == complete_graph(3));
    CHECK(wg.weights == std::vector<double>{1, -1.5, 1});
    std::ostringstream out;
    write_graph(out, wg);
    auto again = read_graph_string(out.str());
    CHECK(again.graph == wg.graph);
    CHECK(again.weights == wg.weights);
}

TEST_CASE("graph text format errors name the line") {
    auto line_of = [](const std::string& text) {
        try {
            read_graph_string(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("p 3 2\ne 1 2\ne 2 1\n") == 3);
    CHECK(line_of("p 3 1\n\ne 2 2\n") == 3);
    CHECK(line_of("p 3 1\ne 1 4\n") == 2);
    CHECK(line_of("e 1 2\n") == 1);
    CHECK(line_of("p 3 1\nq 1 2\n") == 2);
    CHECK(line_of("p 0 0\n") == 1);
    CHECK(line_of("p 3 2\ne 1 2\n") != -1);
    CHECK(line_of("") != -1);
}
