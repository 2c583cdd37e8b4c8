#include "truemper/json_io.hpp"

#include <stdexcept>

namespace truemper {

Json to_json(const Certificate& c) {
    Json j;
    j["kind"] = to_string(c.kind);
    j["vertices"] = c.vertices;
    if (c.center) j["center"] = *c.center;
    if (c.paths) j["paths"] = Json::array({(*c.paths)[0], (*c.paths)[1], (*c.paths)[2]});
    return j;
}

Certificate certificate_from_json(const Json& j) {
    try {
        auto kind = config_kind_from_string(j.at("kind").get<std::string>());
        if (!kind) throw std::invalid_argument("unknown certificate kind");
        Certificate c{*kind, j.at("vertices").get<std::vector<int>>(), std::nullopt, std::nullopt};
        if (j.contains("center")) c.center = j["center"].get<int>();
        if (j.contains("paths")) {
            const auto& p = j["paths"];
            if (!p.is_array() || p.size() != 3) throw std::invalid_argument("paths must hold three lists");
            c.paths = std::array<std::vector<int>, 3>{p[0].get<std::vector<int>>(), p[1].get<std::vector<int>>(),
                                                      p[2].get<std::vector<int>>()};
        }
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("certificate: ") + e.what());
    }
}

Json to_json(const GoodPartition& p) { return p.parts; }

Json to_json(const DecompositionTree& t) {
    Json nodes = Json::array();
    for (const auto& node : t.nodes) {
        Json j;
        j["id"] = node.id;
        j["kind"] = node.leaf ? "leaf" : "internal";
        j["cutset"] = node.cutset.to_vector();
        j["vertices"] = node.vertices.to_vector();
        j["children"] = node.children;
        nodes.push_back(std::move(j));
    }
    Json j;
    j["nodes"] = std::move(nodes);
    j["leaves"] = t.leaves();
    return j;
}

Json to_json(const LeafFailure& f) {
    Json j;
    j["leaf"] = f.leaf;
    j["anticomponent"] = f.anticomponent;
    j["reason"] = f.reason;
    return j;
}

Json recognition_json(GraphClass c, const Recognition& r) {
    Json j;
    j["class"] = to_string(c);
    j["member"] = r.member;
    j["certificate"] = r.certificate ? to_json(*r.certificate) : Json(nullptr);
    if (r.failure) j["failure"] = to_json(*r.failure);
    return j;
}

}  // namespace truemper
