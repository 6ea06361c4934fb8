#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "skein/surface.hpp"

namespace skein {

namespace {

using ojson = nlohmann::ordered_json;

std::vector<int> int_array(const ojson& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string("datum file: ") + what + " must be an array");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw std::invalid_argument(std::string("datum file: ") + what + " must hold integers");
        out.push_back(x.get<int>());
    }
    return out;
}

const ojson& field(const ojson& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw std::invalid_argument(std::string("datum file: missing key \"") + key + "\"");
    return *it;
}

}  // namespace

std::string datum_to_json(const DTDatum& d) {
    ojson j;
    j["vertices"] = d.graph().vertices;
    ojson edges = ojson::array();
    for (const auto& e : d.graph().edges) {
        ojson je;
        je["curve"] = e.curve;
        je["half_edges"] = {e.h1, e.h2};
        edges.push_back(je);
    }
    j["edges"] = edges;
    j["legs"] = d.graph().legs;
    j["slots"] = d.slots();
    return j.dump(2) + "\n";
}

DTDatum datum_from_json(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("datum file: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("datum file: top level must be an object");
    FatGraph g;
    const auto& verts = field(j, "vertices");
    if (!verts.is_array()) throw std::invalid_argument("datum file: vertices must be an array");
    for (const auto& v : verts) g.vertices.push_back(int_array(v, "vertex"));
    const auto& edges = field(j, "edges");
    if (!edges.is_array()) throw std::invalid_argument("datum file: edges must be an array");
    for (const auto& e : edges) {
        if (!e.is_object()) throw std::invalid_argument("datum file: edge must be an object");
        auto hs = int_array(field(e, "half_edges"), "half_edges");
        if (hs.size() != 2) throw std::invalid_argument("datum file: an edge has exactly two half-edges");
        const auto& c = field(e, "curve");
        if (!c.is_number_integer()) throw std::invalid_argument("datum file: curve must be an integer");
        g.edges.push_back({hs[0], hs[1], c.get<int>()});
    }
    g.legs = int_array(field(j, "legs"), "legs");
    std::vector<std::vector<int>> slots;
    const auto& sl = field(j, "slots");
    if (!sl.is_array()) throw std::invalid_argument("datum file: slots must be an array");
    for (const auto& s : sl) slots.push_back(int_array(s, "slots"));
    return DTDatum(std::move(g), std::move(slots));
}

DTDatum load_datum(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open datum file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return datum_from_json(ss.str());
}

}  // namespace skein
