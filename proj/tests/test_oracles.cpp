#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "truemper/chordal.hpp"
#include "truemper/oracles.hpp"

using namespace truemper;
using namespace truemper::testing;

namespace {

Graph w54() {
    auto g = join(cycle_graph(5), complete_graph(1));
    g.remove_edge(0, 5);
    return g;
}

Graph pyramid() {
    return make_graph(7, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 6}, {5, 6}});
}

bool has(const std::set<ConfigKind>& s, ConfigKind k) { return s.count(k) > 0; }

}  // namespace

TEST_CASE("chromatic number") {
    CHECK(brute_chi(cycle_graph(5)) == 3);
    for (int n = 1; n <= 7; ++n) CHECK(brute_chi(complete_graph(n)) == n);
    CHECK(brute_chi(join(cycle_graph(5), cycle_graph(5))) == 6);
    CHECK(brute_chi(edgeless_graph(4)) == 1);
    CHECK(brute_chi(complement(cycle_graph(7))) == 4);
    CHECK_THROWS_AS(brute_chi(edgeless_graph(17)), std::length_error);
}

TEST_CASE("weighted clique and stable set") {
    auto c5 = WeightedGraph(cycle_graph(5));
    CHECK(brute_omega_w(c5).value == 2);
    CHECK(brute_alpha_w(c5).value == 2);
    CHECK(brute_alpha_w(WeightedGraph(k23())).value == 3);
    auto p3 = WeightedGraph(path_graph(3), {2, 3, 2});
    auto a = brute_alpha_w(p3);
    CHECK(a.value == 4);
    CHECK(a.set.to_vector() == std::vector<int>{0, 2});
    auto negative = WeightedGraph(complete_graph(3), {-1, 0, -2});
    CHECK(brute_omega_w(negative).value == 0);
    CHECK(brute_omega_w(negative).set.empty());
    CHECK_THROWS_AS(brute_omega_w(WeightedGraph(edgeless_graph(21))), std::length_error);
}

TEST_CASE("truemper scan examples") {
    auto prism = complement(cycle_graph(6));
    std::vector<ConfigKind> truemper{ConfigKind::Theta,          ConfigKind::Pyramid,   ConfigKind::Prism,
                                     ConfigKind::UniversalWheel, ConfigKind::TwinWheel, ConfigKind::ProperWheel};
    auto c = truemper_scan(prism, truemper);
    REQUIRE(c);
    CHECK(c->kind == ConfigKind::Prism);
    CHECK(check_certificate(prism, *c));

    auto w = truemper_scan(w54(), truemper);
    REQUIRE(w);
    CHECK(w->kind == ConfigKind::ProperWheel);
    CHECK(check_certificate(w54(), *w));

    CHECK_FALSE(truemper_scan(complete_graph(6), truemper));
    CHECK_FALSE(truemper_scan(gen_chordal(5, 12, 0.5), truemper));
    CHECK_THROWS_AS(truemper_scan(edgeless_graph(13), truemper), std::length_error);
}

TEST_CASE("truemper kinds of small configurations") {
    CHECK(has(truemper_kinds(k23()), ConfigKind::Theta));
    CHECK(has(truemper_kinds(pyramid()), ConfigKind::Pyramid));
    CHECK(has(truemper_kinds(wheel(4)), ConfigKind::UniversalWheel));
    auto twin = join(cycle_graph(5), complete_graph(1));
    twin.remove_edge(3, 5);
    twin.remove_edge(4, 5);
    auto tk = truemper_kinds(twin);
    CHECK(has(tk, ConfigKind::TwinWheel));
    CHECK_FALSE(has(tk, ConfigKind::ProperWheel));
    CHECK(truemper_kinds(house()) == std::set<ConfigKind>{ConfigKind::Cap});
    CHECK(truemper_kinds(cycle_graph(7)).empty());
}

TEST_CASE("scan results are valid certificates") {
    Rng rng(5);
    std::vector<ConfigKind> everything{ConfigKind::Theta,     ConfigKind::Pyramid,     ConfigKind::Prism,
                                       ConfigKind::UniversalWheel, ConfigKind::TwinWheel, ConfigKind::ProperWheel,
                                       ConfigKind::Cap};
    for (int t = 0; t < 200; ++t) {
        auto g = random_graph(rng, rng.uniform(4, 9), rng.real());
        for (ConfigKind k : everything) {
            std::vector<ConfigKind> one{k};
            auto c = truemper_scan(g, one);
            CHECK(c.has_value() == has(truemper_kinds(g), k));
            if (c) {
                CHECK(c->kind == k);
                CHECK(check_certificate(g, *c));
            }
        }
    }
}

TEST_CASE("holes") {
    CHECK(brute_holes(complete_graph(5)).empty());
    auto h = brute_holes(cycle_graph(6));
    REQUIRE(h.size() == 1);
    CHECK(h[0].size() == 6);
    CHECK(brute_holes(k23()).size() == 3);
    Rng rng(9);
    for (int t = 0; t < 200; ++t) {
        auto g = random_graph(rng, rng.uniform(1, 9), rng.real());
        CHECK(brute_holes(g).empty() == is_chordal(g));
    }
}

TEST_CASE("ring oracle") {
    CHECK(brute_is_ring(cycle_graph(4)));
    CHECK(brute_is_ring(cycle_graph(7)));
    CHECK_FALSE(brute_is_ring(complete_graph(4)));
    CHECK_FALSE(brute_is_ring(house()));
    std::vector<int> sizes{2, 1, 1, 1, 1};
    CHECK(brute_is_ring(gen_hyperhole(5, sizes)));
}

TEST_CASE("clique cutset oracle") {
    CHECK_FALSE(brute_has_clique_cutset(cycle_graph(5)));
    CHECK_FALSE(brute_has_clique_cutset(complete_graph(4)));
    CHECK(brute_has_clique_cutset(path_graph(3)));
    CHECK(brute_has_clique_cutset(edgeless_graph(2)));
    CHECK_FALSE(brute_has_clique_cutset(complete_graph(1)));
}

TEST_CASE("weighted cycle chromatic number") {
    std::vector<int> ones(5, 1), twos(5, 2), even{2, 1, 2, 1};
    CHECK(brute_weighted_cycle_chi(5, ones) == 3);
    CHECK(brute_weighted_cycle_chi(5, twos) == 5);
    CHECK(brute_weighted_cycle_chi(4, even) == 3);
    std::vector<int> tri{1, 2, 3};
    CHECK(brute_weighted_cycle_chi(3, tri) == 6);
}
