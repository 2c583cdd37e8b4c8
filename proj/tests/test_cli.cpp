#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "support.hpp"
#include "truemper/cli.hpp"
#include "truemper/graph_io.hpp"
#include "truemper/json_io.hpp"
#include "truemper/oracles.hpp"

using namespace truemper;
using namespace truemper::testing;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;

    Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    args.insert(args.begin(), "truemper");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    std::istringstream in(input);
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err, in);
    return {code, out.str(), err.str()};
}

std::string text(const Graph& g) {
    std::ostringstream s;
    write_graph(s, g);
    return s.str();
}

}  // namespace

TEST_CASE("recognize") {
    auto c5 = run({"recognize", "-", "--class", "gut"}, text(cycle_graph(5)));
    CHECK(c5.code == kOk);
    CHECK(c5.json()["member"] == true);

    auto k = run({"recognize", "-", "--class", "gut"}, text(k23()));
    CHECK(k.code == kNonMember);
    auto cert = certificate_from_json(k.json()["certificate"]);
    CHECK(cert.kind == ConfigKind::K23);
    CHECK(check_certificate(k23(), cert));

    CHECK(run({"recognize", "-", "--class", "gut"}, "p 3 1\ne 1 1\n").code == kInputError);
    CHECK(run({"recognize", "-", "--class", "gut"}, "garbage\n").code == kInputError);
    CHECK(run({"recognize", "-", "--class", "xyz"}, text(cycle_graph(5))).code == kInputError);
    CHECK(run({"recognize", "/nonexistent/graph.txt", "--class", "gu"}).code == kInputError);
    CHECK(run({"frobnicate"}).code == kInputError);
}

TEST_CASE("solve") {
    auto c6 = cycle_graph(6);
    std::vector<std::pair<int, int>> edge{{0, 0}, {1, 1}};
    auto g = glue(c6, complete_graph(3), edge).graph;
    auto col = run({"solve", "-", "--class", "gu", "--problem", "color"}, text(g));
    CHECK(col.code == kOk);
    CHECK(col.json()["value"] == 3);
    CHECK(col.json()["solution"]["kind"] == "coloring");

    std::vector<int> sizes{2, 1, 3, 1, 2, 1};
    auto ring = gen_ring(7, 6, sizes).graph;
    auto s = run({"solve", "-", "--class", "gt", "--problem", "mwss"}, text(ring));
    CHECK(s.code == kOk);
    CHECK(s.json()["value"] == brute_alpha_w(WeightedGraph(ring)).value);
    CHECK(s.json()["solution"]["kind"] == "stable_set");

    auto weighted = run({"solve", "-", "--class", "gutcap", "--problem", "mwc"},
                        "p 3 2\ne 1 2\ne 2 3\nw 1 5\nw 2 -1\nw 3 4.5\n");
    CHECK(weighted.code == kOk);
    CHECK(weighted.json()["value"] == 5);

    CHECK(run({"solve", "-", "--class", "gut", "--problem", "mwc"}, text(c6)).code == kUnsupported);
    CHECK(run({"solve", "-", "--class", "gut", "--problem", "color"}, text(c6)).code == kUnsupported);
    CHECK(run({"solve", "-", "--class", "gt", "--problem", "color"}, text(c6)).code == kUnsupported);
    CHECK(run({"solve", "-", "--class", "gu", "--problem", "nope"}, text(c6)).code == kInputError);

    auto twin = wheel(5);
    twin.remove_edge(3, 5);
    twin.remove_edge(4, 5);
    auto rejected = run({"solve", "-", "--class", "gu", "--problem", "mwss"}, text(twin));
    CHECK(rejected.code == kNonMember);
    CHECK(rejected.json()["member"] == false);
}

TEST_CASE("decompose") {
    auto p3 = run({"decompose", "-"}, text(path_graph(3))).json();
    CHECK(p3["leaves"].size() == 2);
    auto c5 = run({"decompose", "-"}, text(cycle_graph(5))).json();
    CHECK(c5["leaves"].size() == 1);
    CHECK(c5["nodes"][0]["kind"] == "leaf");
}

TEST_CASE("generate") {
    auto ring = run({"generate", "--kind", "ring", "--k", "5", "--sizes", "1,1,1,1,1", "--seed", "3"});
    CHECK(ring.code == kOk);
    CHECK(read_graph_string(ring.out).graph == cycle_graph(5));
    auto anti = run({"generate", "--kind", "hyperantihole", "--k", "7"});
    CHECK(read_graph_string(anti.out).graph == complement(cycle_graph(7)));
    auto m1 = run({"generate", "--kind", "member", "--class", "gu", "--seed", "9", "--max-n", "12"});
    auto m2 = run({"generate", "--kind", "member", "--class", "gu", "--seed", "9", "--max-n", "12"});
    CHECK(m1.out == m2.out);
    CHECK(run({"recognize", "-", "--class", "gu"}, m1.out).code == kOk);
    CHECK(run({"generate", "--kind", "ring", "--k", "3"}).code == kInputError);
    CHECK(run({"generate", "--kind", "ring", "--k", "5", "--sizes", "1,2"}).code == kInputError);
    CHECK(run({"generate", "--kind", "blob"}).code == kInputError);
}

TEST_CASE("verify-chi") {
    auto a = run({"verify-chi", "--class", "gu", "--trials", "12", "--max-n", "10", "--seed", "5"});
    CHECK(a.code == kOk);
    auto j = a.json();
    CHECK(j["pass"] == true);
    CHECK(j["results"].size() == 12);
    for (std::size_t i = 0; i < 12; ++i) CHECK(j["results"][i]["seed"] == 5 + i);
    auto b = run({"verify-chi", "--class", "gu", "--trials", "12", "--max-n", "10", "--seed", "5"});
    CHECK(a.out == b.out);
    auto h = run({"verify-chi", "--class", "hyperantihole7", "--trials", "5", "--max-n", "12", "--seed", "1"});
    CHECK(h.code == kOk);
    CHECK(run({"verify-chi", "--class", "gu", "--max-n", "40"}).code == kInputError);
}
