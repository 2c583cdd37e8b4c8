#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "truemper/chordal.hpp"
#include "truemper/class_solvers.hpp"
#include "truemper/oracles.hpp"
#include "truemper/rings.hpp"

using namespace truemper;
using namespace truemper::testing;

TEST_CASE("rings") {
    std::vector<int> ones(5, 1);
    CHECK(gen_ring(99, 5, ones).graph == cycle_graph(5));
    std::vector<int> sizes{2, 1, 1, 1, 1, 1};
    auto r = gen_ring(4, 6, sizes);
    CHECK(r.graph.order() == 7);
    CHECK(verify_good_partition(r.graph, r.partition));
    std::vector<int> four{3, 2, 2, 1};
    auto q = gen_ring(8, 4, four);
    CHECK(verify_good_partition(q.graph, q.partition));
    CHECK_THROWS(gen_ring(1, 3, std::vector<int>{1, 1, 1}));
    CHECK_THROWS(gen_ring(1, 4, std::vector<int>{1, 0, 1, 1}));
}

TEST_CASE("hyperholes and hyperantiholes") {
    std::vector<int> ones(6, 1);
    CHECK(gen_hyperhole(6, ones) == cycle_graph(6));
    std::vector<int> seven(7, 1);
    CHECK(gen_hyperantihole(7, seven) == complement(cycle_graph(7)));
    std::vector<int> sizes{2, 2, 1, 1, 1};
    CHECK(recognize_hyperhole(gen_hyperhole(5, sizes)));
}

TEST_CASE("chordal graphs") {
    auto tree = gen_chordal(2, 10, 0.0);
    CHECK(tree.edge_count() == 9);
    CHECK(is_connected(tree));
    CHECK(gen_chordal(2, 8, 1.0) == complete_graph(8));
    auto g = gen_chordal(6, 12, 0.5);
    CHECK(brute_holes(g).empty());
}

TEST_CASE("deterministic per seed") {
    for (GraphClass c : {GraphClass::GUT, GraphClass::GU, GraphClass::GT, GraphClass::GUTCapFree}) {
        CHECK(gen_class_member(12345, c, 3, 14) == gen_class_member(12345, c, 3, 14));
    }
    std::vector<int> sizes{2, 3, 1, 2, 2};
    CHECK(gen_ring(5, 5, sizes).graph == gen_ring(5, 5, sizes).graph);
    CHECK(gen_chordal(5, 11, 0.3) == gen_chordal(5, 11, 0.3));
}

TEST_CASE("basic graphs belong to their class") {
    Rng rng(73);
    for (int t = 0; t < 150; ++t) {
        for (GraphClass c : {GraphClass::GUT, GraphClass::GU, GraphClass::GT, GraphClass::GUTCapFree}) {
            auto g = gen_basic(rng, c, rng.uniform(1, 12));
            CHECK(g.order() <= 12);
            CHECK(recognize(g, c).member);
            auto forbid = forbidden_kinds(c);
            CHECK_FALSE(truemper_scan(g, forbid));
        }
    }
}

TEST_CASE("glued members belong to their class") {
    Rng rng(79);
    for (int t = 0; t < 150; ++t) {
        for (GraphClass c : {GraphClass::GUT, GraphClass::GU, GraphClass::GT, GraphClass::GUTCapFree}) {
            auto g = gen_class_member(rng.next(), c, rng.uniform(1, 4), 12);
            CHECK(g.order() <= 12);
            CHECK(recognize(g, c).member);
            auto forbid = forbidden_kinds(c);
            CHECK_FALSE(truemper_scan(g, forbid));
        }
    }
}
