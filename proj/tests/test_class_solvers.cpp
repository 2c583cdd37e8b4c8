#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "truemper/class_solvers.hpp"
#include "truemper/decomposition.hpp"
#include "truemper/oracles.hpp"

using namespace truemper;
using namespace truemper::testing;

namespace {

const GraphClass kClasses[] = {GraphClass::GUT, GraphClass::GU, GraphClass::GT, GraphClass::GUTCapFree};

bool scan_member(const Graph& g, GraphClass c) {
    auto forbid = forbidden_kinds(c);
    return !truemper_scan(g, forbid).has_value();
}

Graph twin_wheel() {
    auto g = wheel(5);
    g.remove_edge(3, 5);
    g.remove_edge(4, 5);
    return g;
}

std::vector<BuhKind> kinds_of(const std::vector<BuhPart>& parts) {
    std::vector<BuhKind> k;
    for (const auto& p : parts) k.push_back(p.kind);
    std::sort(k.begin(), k.end());
    return k;
}

}  // namespace

TEST_CASE("class names") {
    for (GraphClass c : kClasses) CHECK(graph_class_from_string(to_string(c)) == c);
    CHECK_FALSE(graph_class_from_string("gx"));
}

TEST_CASE("GUT recognition") {
    CHECK(recognize_gut(cycle_graph(5)).member);
    auto k = recognize_gut(k23());
    CHECK_FALSE(k.member);
    REQUIRE(k.certificate);
    CHECK(k.certificate->kind == ConfigKind::K23);
    CHECK(check_certificate(k23(), *k.certificate));
    std::vector<std::pair<int, int>> vertex{{0, 0}};
    auto glued = glue(cycle_graph(7), complete_graph(3), vertex).graph;
    CHECK(recognize_gut(glued).member);
    CHECK(scan_member(glued, GraphClass::GUT));
}

TEST_CASE("B_U^h recognition") {
    auto c4 = recognize_bu_h(cycle_graph(4));
    REQUIRE(c4);
    CHECK(kinds_of(*c4) == std::vector<BuhKind>{BuhKind::K2bar, BuhKind::K2bar});
    auto c7k2 = recognize_bu_h(join(cycle_graph(7), complete_graph(2)));
    REQUIRE(c7k2);
    CHECK(kinds_of(*c7k2) == std::vector<BuhKind>{BuhKind::K1, BuhKind::K1, BuhKind::OddLongHole});
    CHECK_FALSE(recognize_bu_h(house()));
    auto paths = recognize_bu_h(join(disjoint_union(path_graph(3), path_graph(2)), complete_graph(1)));
    REQUIRE(paths);
    CHECK(kinds_of(*paths) == std::vector<BuhKind>{BuhKind::K1, BuhKind::PathForest});
    auto c6 = recognize_bu_h(cycle_graph(6));
    REQUIRE(c6);
    CHECK(kinds_of(*c6) == std::vector<BuhKind>{BuhKind::EvenLongHole});
}

TEST_CASE("GU examples") {
    auto w4 = wheel(4);
    CHECK(recognize_gu(w4).member);
    CHECK(scan_member(w4, GraphClass::GU));
    auto c = color_gu(w4);
    REQUIRE(c);
    CHECK(c->count() == 3);
    CHECK(c->count() == brute_chi(w4));
    CHECK_FALSE(recognize_gu(twin_wheel()).member);
    CHECK_FALSE(color_gu(twin_wheel()));
    auto c7k1 = join(cycle_graph(7), complete_graph(1));
    auto odd = color_gu(c7k1);
    REQUIRE(odd);
    CHECK(odd->count() == 4);
    CHECK(brute_omega(c7k1) + 1 == 4);
}

TEST_CASE("GT examples") {
    std::vector<int> sizes{2, 1, 3, 1, 2};
    CHECK(recognize_gt(gen_ring(3, 5, sizes).graph).member);
    CHECK(recognize_gt(complement(cycle_graph(7))).member);
    CHECK_FALSE(recognize_gt(wheel(5)).member);
    CHECK_FALSE(mwc_gt(WeightedGraph(wheel(5))));

    auto kn = mwc_gt(WeightedGraph(complete_graph(5)));
    REQUIRE(kn);
    CHECK(kn->size() == 5);
    WeightedGraph c5(cycle_graph(5), {1, 1, 1, 5, 5});
    auto heavy = mwc_gt(c5);
    REQUIRE(heavy);
    CHECK(heavy->to_vector() == std::vector<int>{3, 4});
    auto s = mwss_gt(WeightedGraph(cycle_graph(5)));
    REQUIRE(s);
    CHECK(s->size() == 2);
    auto a = mwss_gt(WeightedGraph(complement(cycle_graph(7))));
    REQUIRE(a);
    CHECK(a->size() == 2);
}

TEST_CASE("GUT cap-free examples") {
    CHECK(recognize_gutcap(cycle_graph(6)).member);
    auto c6 = color_gutcap(cycle_graph(6));
    REQUIRE(c6);
    CHECK(c6->count() == 2);
    auto h = recognize_gutcap(house());
    CHECK_FALSE(h.member);
    REQUIRE(h.certificate);
    CHECK(h.certificate->kind == ConfigKind::Cap);
    auto c5c5 = join(cycle_graph(5), cycle_graph(5));
    auto col = color_gutcap(c5c5);
    REQUIRE(col);
    CHECK(col->count() == 6);
    CHECK(brute_omega(c5c5) == 4);
    CHECK(is_proper_coloring(c5c5, *col));
}

TEST_CASE("recognizers agree with the definitional scan on all graphs with five vertices") {
    for (std::uint64_t m = 0; m < (1u << 10); ++m) {
        auto g = graph_from_mask(5, m);
        for (GraphClass c : kClasses) CHECK(recognize(g, c).member == scan_member(g, c));
    }
}

TEST_CASE("recognizers agree with the definitional scan on random graphs") {
    Rng rng(59);
    for (int t = 0; t < 200; ++t) {
        auto g = random_graph(rng, rng.uniform(5, 9), rng.real());
        for (GraphClass c : kClasses) {
            auto r = recognize(g, c);
            CHECK(r.member == scan_member(g, c));
            if (r.certificate) CHECK(check_certificate(g, *r.certificate));
        }
    }
}

TEST_CASE("class members are solved exactly") {
    Rng rng(61);
    for (int t = 0; t < 60; ++t) {
        for (GraphClass c : {GraphClass::GU, GraphClass::GT, GraphClass::GUTCapFree}) {
            auto g = gen_class_member(rng.next(), c, rng.uniform(1, 3), 12);
            REQUIRE(recognize(g, c).member);
            WeightedGraph wg(g, random_weights(rng, g.order(), -3, 9));
            auto best_c = brute_omega_w(wg).value;
            auto best_s = brute_alpha_w(wg).value;
            int omega = brute_omega(g);
            std::optional<VertexSet> clique, stable;
            std::optional<Coloring> col;
            if (c == GraphClass::GU) {
                clique = mwc_gu(wg);
                stable = mwss_gu(wg);
                col = color_gu(g);
            } else if (c == GraphClass::GT) {
                clique = mwc_gt(wg);
                stable = mwss_gt(wg);
            } else {
                clique = mwc_gutcap(wg);
                stable = mwss_gutcap(wg);
                col = color_gutcap(g);
            }
            REQUIRE(clique);
            REQUIRE(stable);
            CHECK(is_clique(g, *clique));
            CHECK(is_stable(g, *stable));
            CHECK(weight_of(wg.weights, *clique) == best_c);
            CHECK(weight_of(wg.weights, *stable) == best_s);
            if (col) {
                CHECK(is_proper_coloring(g, *col));
                CHECK(col->count() == brute_chi(g));
                int bound = c == GraphClass::GU ? omega + 1 : 3 * omega / 2;
                CHECK(col->count() <= bound);
            }
        }
    }
}

TEST_CASE("membership is hereditary") {
    Rng rng(67);
    for (int t = 0; t < 60; ++t) {
        for (GraphClass c : kClasses) {
            auto g = gen_class_member(rng.next(), c, 2, 12);
            VertexSet s(g.order());
            for (int v = 0; v < g.order(); ++v)
                if (rng.chance(0.7)) s.insert(v);
            if (s.empty()) continue;
            CHECK(recognize(induced_subgraph(g, s).graph, c).member);
        }
    }
}

TEST_CASE("double star cutset of a house") {
    auto g = house();
    auto cap = find_cap(g);
    REQUIRE(cap);
    auto d = double_star_cutset_from_cap(g, *cap);
    REQUIRE(d);
    CHECK(g.adjacent(d->x, d->y));
    CHECK(d->cutset.to_vector() == std::vector<int>{std::min(d->x, d->y), std::max(d->x, d->y)});
    Certificate bogus{ConfigKind::Cap, {0, 1, 2, 3}, 2, {}};
    CHECK_THROWS(double_star_cutset_from_cap(g, bogus));
}

TEST_CASE("double star cutset separates the cap") {
    Rng rng(71);
    int checked = 0;
    for (int t = 0; t < 400 && checked < 40; ++t) {
        auto g = gen_class_member(rng.next(), GraphClass::GUT, rng.uniform(1, 3), 13);
        auto cap = find_cap(g);
        if (!cap) continue;
        ++checked;
        auto d = double_star_cutset_from_cap(g, *cap);
        REQUIRE(d);
        CHECK(g.adjacent(d->x, d->y));
        CHECK(d->cutset.is_subset_of(g.closed_neighborhood(d->x) | g.closed_neighborhood(d->y)));
        int c = *cap->center;
        CHECK_FALSE(d->cutset.contains(c));
        auto rest = g.vertices() - d->cutset;
        for (const auto& comp : components(g, rest)) {
            if (!comp.contains(c)) continue;
            for (std::size_t i = 2; i < cap->vertices.size(); ++i) CHECK_FALSE(comp.contains(cap->vertices[i]));
        }
        int omega = brute_omega(g);
        CHECK(d->cutset.size() <= omega * (omega - 1) / 2 + 4 * omega - 7);
    }
    CHECK(checked > 0);
}
