// JSON encodings: crossing lists (bare array of {sign, g, t}), box diagrams
// ({q, unit, boxes}), chain complexes ({ranks, matrices} of rational-function
// strings), and the realize pipeline output.
#pragma once

#include <eqknot/construct.hpp>
#include <eqknot/torsion.hpp>

#include <json.hpp>

namespace eqknot {

nlohmann::ordered_json crossings_to_json(const CrossingList& c);
CrossingList crossings_from_json(const nlohmann::json& j, long q);

nlohmann::ordered_json boxes_to_json(const BoxDiagram& b);
BoxDiagram boxes_from_json(const nlohmann::json& j);

nlohmann::ordered_json complex_to_json(const BasedChainComplex& c);
BasedChainComplex complex_from_json(const nlohmann::json& j);

nlohmann::ordered_json realization_to_json(const Realization& r);

}  // namespace eqknot
