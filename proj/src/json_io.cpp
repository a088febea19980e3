#include "nss/json_io.hpp"

#include <map>
#include <stdexcept>

namespace nss {

Json maya_to_json(const MayaDiagram& m) {
    Json dev = Json::array();
    for (int k : m.flips()) dev.push_back(Json::array({k, m.color(k) == Bead::Black ? "black" : "white"}));
    return Json{{"kind", m.kind() == Kind::LeftBlack ? "left-black" : "right-black"}, {"deviations", std::move(dev)}};
}

MayaDiagram maya_from_json(const Json& j) {
    const std::string kind_name = j.at("kind").get<std::string>();
    Kind kind;
    if (kind_name == "left-black")
        kind = Kind::LeftBlack;
    else if (kind_name == "right-black")
        kind = Kind::RightBlack;
    else
        throw std::invalid_argument("maya_from_json: unknown kind '" + kind_name + "'");

    const MayaDiagram vac = MayaDiagram::vacuum(kind);
    std::map<int, Bead> seen;
    std::vector<int> flips;
    for (const auto& entry : j.at("deviations")) {
        if (!entry.is_array() || entry.size() != 2) throw std::invalid_argument("maya_from_json: deviation must be [label, color]");
        const int label = entry[0].get<int>();
        const std::string color_name = entry[1].get<std::string>();
        Bead color;
        if (color_name == "black")
            color = Bead::Black;
        else if (color_name == "white")
            color = Bead::White;
        else
            throw std::invalid_argument("maya_from_json: unknown color '" + color_name + "'");
        auto [it, inserted] = seen.emplace(label, color);
        if (!inserted) {
            if (it->second != color) throw std::invalid_argument("maya_from_json: conflicting colors for one label");
            continue;
        }
        if (color != vac.vacuum_color(label)) flips.push_back(label);
    }
    return MayaDiagram::from_flips(kind, std::move(flips));
}

Json partition_to_json(const ChargedPartition& p) {
    return Json{{"parts", p.parts},
                {"charge", p.charge},
                {"orientation", p.orientation == Orientation::Downward ? "downward" : "upward"}};
}

ChargedPartition partition_from_json(const Json& j) {
    ChargedPartition p;
    p.parts = j.at("parts").get<std::vector<int>>();
    p.charge = j.at("charge").get<int>();
    const std::string o = j.contains("orientation") ? j.at("orientation").get<std::string>() : "downward";
    if (o == "downward")
        p.orientation = Orientation::Downward;
    else if (o == "upward")
        p.orientation = Orientation::Upward;
    else
        throw std::invalid_argument("partition_from_json: unknown orientation '" + o + "'");
    if (!p.valid()) throw std::invalid_argument("partition_from_json: parts must be positive and weakly decreasing");
    return p;
}

Json datum_to_json(const NssDatum& m) { return Json{{"n", m.rank()}, {"word", m.word()}}; }

NssDatum datum_from_json(const Json& j) {
    NssDatum m = NssDatum::zero(CartanData(j.at("n").get<int>()));
    for (int i : j.at("word").get<std::vector<int>>()) {
        if (i < 0 || i >= m.rank()) throw std::invalid_argument("datum_from_json: letter out of range");
        m = m.apply_fhat(i);
    }
    return m;
}

Json value_table_json(const NssDatum& m, const std::vector<MayaDiagram>& diagrams) {
    Json out = Json::array();
    for (const auto& d : diagrams) out.push_back(Json{{"diagram", maya_to_json(d)}, {"value", m.eval(d)}});
    return out;
}

}  // namespace nss
