#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nss/fock.hpp"
#include "nss/laurent.hpp"
#include "nss/maya.hpp"
#include "nss/nss.hpp"

// JSON encodings. Loading canonicalizes; field order is not significant.
namespace nss {

using Json = nlohmann::ordered_json;

/// {"kind": "left-black"|"right-black", "deviations": [[label, "black"|"white"], ...]}
/// Deviations are read relative to the kind's charge-zero vacuum; entries that
/// repeat the vacuum color are dropped on load.
Json maya_to_json(const MayaDiagram& m);
MayaDiagram maya_from_json(const Json& j);

/// {"parts": [...], "charge": k, "orientation": "downward"|"upward"}
Json partition_to_json(const ChargedPartition& p);
ChargedPartition partition_from_json(const Json& j);

/// {"n": n, "word": [i1, ...]}
Json datum_to_json(const NssDatum& m);
NssDatum datum_from_json(const Json& j);

/// [{"diagram": ..., "value": k}, ...]
Json value_table_json(const NssDatum& m, const std::vector<MayaDiagram>& diagrams);

/// {"exp": "coeff", ...}
template <CoeffRing C>
Json laurent_to_json(const LaurentPoly<C>& p) {
    Json j = Json::object();
    for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = coeff_string(c);
    return j;
}

template <CoeffRing C>
Json fock_to_json(const FockVector<C>& v) {
    Json out = Json::array();
    for (const auto& [m, c] : v.terms()) out.push_back(Json{{"diagram", maya_to_json(m)}, {"coeff", laurent_to_json(c)}});
    return out;
}

}  // namespace nss
