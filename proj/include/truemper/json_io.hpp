#pragma once

#include <json.hpp>

#include "truemper/class_solvers.hpp"
#include "truemper/decomposition.hpp"
#include "truemper/detectors.hpp"
#include "truemper/rings.hpp"

namespace truemper {

using Json = nlohmann::ordered_json;

Json to_json(const Certificate& c);
/// Throws std::invalid_argument on malformed input.
Certificate certificate_from_json(const Json& j);

Json to_json(const GoodPartition& p);
Json to_json(const DecompositionTree& t);
Json to_json(const LeafFailure& f);
Json recognition_json(GraphClass c, const Recognition& r);

}  // namespace truemper
