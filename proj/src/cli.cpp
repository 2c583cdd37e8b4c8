#include "truemper/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "truemper/class_solvers.hpp"
#include "truemper/decomposition.hpp"
#include "truemper/generators.hpp"
#include "truemper/graph_io.hpp"
#include "truemper/json_io.hpp"
#include "truemper/oracles.hpp"

namespace truemper {

namespace {

struct Failure {
    int code;
    std::string message;
};

WeightedGraph load(const std::string& path, std::istream& in) {
    try {
        if (path == "-") return read_graph(in);
        std::ifstream file(path);
        if (!file) throw Failure{kInputError, "cannot open " + path};
        return read_graph(file);
    } catch (const ParseError& e) {
        throw Failure{kInputError, path + ": " + e.what()};
    }
}

GraphClass parse_class(const std::string& name) {
    auto c = graph_class_from_string(name);
    if (!c) throw Failure{kInputError, "unknown class '" + name + "'"};
    return *c;
}

Json vertices_json(const VertexSet& s) { return s.to_vector(); }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_recognize(const std::string& path, const std::string& cls, std::ostream& out, std::istream& in) {
    GraphClass c = parse_class(cls);
    auto wg = load(path, in);
    auto r = recognize(wg.graph, c);
    if (r.certificate && !check_certificate(wg.graph, *r.certificate))
        throw Failure{kVerificationFailure, "emitted certificate does not check"};
    emit(out, recognition_json(c, r));
    return r.member ? kOk : kNonMember;
}

std::optional<std::string> unsupported(GraphClass c, const std::string& problem) {
    if (c == GraphClass::GUT) {
        if (problem == "mwc") return "maximum weight clique is NP-hard on gut";
        return problem + " has no known polynomial algorithm on gut";
    }
    if (c == GraphClass::GT && problem == "color")
        return "optimal coloring on gt has no known polynomial algorithm";
    return std::nullopt;
}

int cmd_solve(const std::string& path, const std::string& cls, const std::string& problem, std::ostream& out,
              std::istream& in) {
    GraphClass c = parse_class(cls);
    if (problem != "mwc" && problem != "mwss" && problem != "color")
        throw Failure{kInputError, "unknown problem '" + problem + "'"};
    if (auto why = unsupported(c, problem)) throw Failure{kUnsupported, "unsupported: " + *why};
    auto wg = load(path, in);
    const Graph& g = wg.graph;

    Json j;
    j["class"] = to_string(c);
    j["problem"] = problem;
    if (problem == "color") {
        auto col = c == GraphClass::GU ? color_gu(g) : color_gutcap(g);
        if (col) {
            if (!is_proper_coloring(g, *col)) throw Failure{kVerificationFailure, "coloring is not proper"};
            j["member"] = true;
            j["certificate"] = nullptr;
            j["solution"] = {{"kind", "coloring"}, {"colors", col->color}};
            j["value"] = col->count();
        }
    } else {
        std::optional<VertexSet> s;
        bool clique = problem == "mwc";
        if (c == GraphClass::GU) s = clique ? mwc_gu(wg) : mwss_gu(wg);
        if (c == GraphClass::GT) s = clique ? mwc_gt(wg) : mwss_gt(wg);
        if (c == GraphClass::GUTCapFree) s = clique ? mwc_gutcap(wg) : mwss_gutcap(wg);
        if (s) {
            if (clique ? !is_clique(g, *s) : !is_stable(g, *s))
                throw Failure{kVerificationFailure, clique ? "solution is not a clique" : "solution is not stable"};
            j["member"] = true;
            j["certificate"] = nullptr;
            j["solution"] = {{"kind", clique ? "clique" : "stable_set"}, {"vertices", vertices_json(*s)}};
            j["value"] = weight_of(wg.weights, *s);
        }
    }
    if (!j.contains("member")) {
        auto r = recognize(g, c);
        if (r.member) throw Failure{kVerificationFailure, "solver rejected a graph the recognizer accepts"};
        auto verdict = recognition_json(c, r);
        verdict["problem"] = problem;
        emit(out, verdict);
        return kNonMember;
    }
    emit(out, j);
    return kOk;
}

int cmd_decompose(const std::string& path, std::ostream& out, std::istream& in) {
    auto wg = load(path, in);
    emit(out, to_json(build_tree(wg.graph)));
    return kOk;
}

struct GenerateOptions {
    std::string kind;
    std::string cls = "gu";
    int k = 0;
    std::vector<int> sizes;
    std::uint64_t seed = 1;
    int max_n = 12;
    int pieces = 3;
    double density = 0.3;
};

int cmd_generate(const GenerateOptions& o, std::ostream& out) {
    std::vector<int> sizes = o.sizes;
    int k = o.k;
    bool cyclic = o.kind == "ring" || o.kind == "hyperhole" || o.kind == "hyperantihole";
    if (cyclic) {
        if (k == 0) k = sizes.empty() ? (o.kind == "hyperantihole" ? 7 : 5) : static_cast<int>(sizes.size());
        if (sizes.empty()) sizes.assign(k, 1);
        if (static_cast<int>(sizes.size()) != k) throw Failure{kInputError, "--sizes must list --k part sizes"};
    }
    try {
        if (o.kind == "ring") {
            write_graph(out, gen_ring(o.seed, k, sizes).graph);
        } else if (o.kind == "hyperhole") {
            write_graph(out, gen_hyperhole(k, sizes));
        } else if (o.kind == "hyperantihole") {
            write_graph(out, gen_hyperantihole(k, sizes));
        } else if (o.kind == "chordal") {
            write_graph(out, gen_chordal(o.seed, o.max_n, o.density));
        } else if (o.kind == "member") {
            write_graph(out, gen_class_member(o.seed, parse_class(o.cls), o.pieces, o.max_n));
        } else {
            throw Failure{kInputError, "unknown kind '" + o.kind + "'"};
        }
    } catch (const std::invalid_argument& e) {
        throw Failure{kInputError, e.what()};
    }
    return kOk;
}

struct Trial {
    std::uint64_t seed = 0;
    int n = 0;
    int omega = 0;
    int chi = 0;
    long long bound = 0;
    bool member = true;
    bool pass = false;
};

long long chi_bound(const std::string& cls, int omega) {
    if (cls == "gu") return omega + 1;
    if (cls == "gt" || cls == "gutcap") return 3 * omega / 2;
    if (cls == "gut") return 2LL * omega * omega * omega * omega;
    return 4 * omega / 3;
}

std::string bound_name(const std::string& cls) {
    if (cls == "gu") return "omega+1";
    if (cls == "gt" || cls == "gutcap") return "floor(3*omega/2)";
    if (cls == "gut") return "2*omega^4";
    return "floor(4*omega/3)";
}

Trial run_trial(const std::string& cls, std::uint64_t seed, int max_n) {
    Trial t;
    t.seed = seed;
    Rng rng(seed);
    Graph g(1);
    if (cls == "hyperantihole7") {
        g = gen_hyperantihole(7, random_sizes(rng, 7, std::max(7, max_n), max_n));
    } else {
        GraphClass c = *graph_class_from_string(cls);
        g = gen_class_member(rng.next(), c, rng.uniform(1, 4), max_n);
        t.member = recognize(g, c).member;
    }
    t.n = g.order();
    t.omega = brute_omega(g);
    t.chi = brute_chi(g);
    t.bound = chi_bound(cls, t.omega);
    t.pass = t.member && t.chi <= t.bound;
    return t;
}

int cmd_verify_chi(const std::string& cls, int trials, int max_n, std::uint64_t seed, std::ostream& out) {
    if (cls != "hyperantihole7") parse_class(cls);
    if (trials < 0) throw Failure{kInputError, "--trials must be nonnegative"};
    if (max_n < 1 || max_n > kChiLimit)
        throw Failure{kInputError, "--max-n must lie in 1.." + std::to_string(kChiLimit)};
    if (cls == "hyperantihole7" && max_n < 7) throw Failure{kInputError, "hyperantihole7 needs --max-n of at least 7"};

    std::vector<Trial> results(trials);
    std::atomic<int> next{0};
    int workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 16));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next++; i < trials; i = next++) results[i] = run_trial(cls, seed + i, max_n);
        });
    for (auto& t : pool) t.join();

    Json rows = Json::array();
    int violations = 0;
    for (int i = 0; i < trials; ++i) {
        const auto& t = results[i];
        if (!t.pass) ++violations;
        rows.push_back({{"trial", i},   {"seed", t.seed},   {"n", t.n},       {"omega", t.omega},
                        {"chi", t.chi}, {"bound", t.bound}, {"member", t.member}, {"pass", t.pass}});
    }
    Json j;
    j["class"] = cls;
    j["bound"] = bound_name(cls);
    j["trials"] = trials;
    j["max_n"] = max_n;
    j["seed"] = seed;
    j["violations"] = violations;
    j["pass"] = violations == 0;
    j["results"] = std::move(rows);
    emit(out, j);
    return violations == 0 ? kOk : kVerificationFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Recognition and optimization for graphs without Truemper configurations", "truemper"};
    app.require_subcommand(1);

    std::string path, cls, problem;
    auto* recognize_cmd = app.add_subcommand("recognize", "Decide class membership");
    recognize_cmd->add_option("graph", path, "Graph file, or - for stdin")->required();
    recognize_cmd->add_option("--class", cls, "gut, gu, gt or gutcap")->required();

    auto* solve_cmd = app.add_subcommand("solve", "Solve mwc, mwss or color on a class member");
    solve_cmd->add_option("graph", path, "Graph file, or - for stdin")->required();
    solve_cmd->add_option("--class", cls, "gut, gu, gt or gutcap")->required();
    solve_cmd->add_option("--problem", problem, "mwc, mwss or color")->required();

    auto* decompose_cmd = app.add_subcommand("decompose", "Clique-cutset decomposition tree");
    decompose_cmd->add_option("graph", path, "Graph file, or - for stdin")->required();

    GenerateOptions gen;
    auto* generate_cmd = app.add_subcommand("generate", "Write a random graph in text format");
    generate_cmd->add_option("--kind", gen.kind, "ring, hyperhole, hyperantihole, chordal or member")->required();
    generate_cmd->add_option("--class", gen.cls, "Class for --kind member");
    generate_cmd->add_option("--k", gen.k, "Cycle length");
    generate_cmd->add_option("--sizes", gen.sizes, "Part sizes a,b,c,...")->delimiter(',');
    generate_cmd->add_option("--seed", gen.seed, "Random seed");
    generate_cmd->add_option("--max-n", gen.max_n, "Vertex budget (vertex count for chordal)");
    generate_cmd->add_option("--pieces", gen.pieces, "Basic pieces glued for --kind member");
    generate_cmd->add_option("--density", gen.density, "Edge density for chordal graphs");

    int trials = 100, max_n = 12;
    std::uint64_t seed = 1;
    auto* verify_cmd = app.add_subcommand("verify-chi", "Check chi-bounds on generated graphs");
    verify_cmd->add_option("--class", cls, "gut, gu, gt, gutcap or hyperantihole7")->required();
    verify_cmd->add_option("--trials", trials, "Number of trials");
    verify_cmd->add_option("--max-n", max_n, "Largest graph order");
    verify_cmd->add_option("--seed", seed, "Seed of trial 0; trial i uses seed+i");

    try {
        std::vector<std::string> args;
        for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kInputError;
    }

    try {
        if (recognize_cmd->parsed()) return cmd_recognize(path, cls, out, in);
        if (solve_cmd->parsed()) return cmd_solve(path, cls, problem, out, in);
        if (decompose_cmd->parsed()) return cmd_decompose(path, out, in);
        if (generate_cmd->parsed()) return cmd_generate(gen, out);
        if (verify_cmd->parsed()) return cmd_verify_chi(cls, trials, max_n, seed, out);
    } catch (const Failure& f) {
        err << f.message << '\n';
        return f.code;
    } catch (const std::length_error& e) {
        err << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace truemper
