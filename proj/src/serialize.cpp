#include "qtree/serialize.hpp"

#include "qtree/errors.hpp"

#include <limits>
#include <sstream>

namespace qtree {

std::string format_ribbon_graph(const RibbonGraph& graph) {
    std::ostringstream os;
    for (const auto& rotation : graph.rotations()) {
        os << 'v';
        for (int h : rotation) os << ' ' << h;
        os << '\n';
    }
    for (const Edge& e : graph.edges())
        os << e.label << ": " << e.first << ' ' << e.second << ' ' << (e.sign > 0 ? '+' : '-') << '\n';
    return os.str();
}

RibbonGraph parse_ribbon_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::vector<int>> rotations;
    std::vector<Edge> edges;
    int line_no = 0;
    const auto fail = [&line_no](const std::string& why) {
        throw ParseError("ribbon graph line " + std::to_string(line_no) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "v") {
            std::vector<int> rotation;
            std::string tok;
            while (ls >> tok) {
                try {
                    std::size_t used = 0;
                    rotation.push_back(std::stoi(tok, &used));
                    if (used != tok.size()) fail("bad half-edge id '" + tok + "'");
                } catch (const std::logic_error&) {
                    fail("bad half-edge id '" + tok + "'");
                }
            }
            rotations.push_back(std::move(rotation));
            continue;
        }
        if (head.back() != ':') fail("expected 'v ...' or 'label: h1 h2 sign'");
        Edge e;
        std::string sign;
        try {
            e.label = std::stoi(head.substr(0, head.size() - 1));
        } catch (const std::logic_error&) {
            fail("bad edge label '" + head + "'");
        }
        std::string extra;
        if (!(ls >> e.first >> e.second >> sign) || (ls >> extra)) fail("expected 'label: h1 h2 sign'");
        if (sign == "+" || sign == "1" || sign == "+1")
            e.sign = 1;
        else if (sign == "-" || sign == "-1")
            e.sign = -1;
        else
            fail("sign must be + or -");
        edges.push_back(e);
    }
    if (rotations.empty()) throw ParseError("ribbon graph: no vertices");
    try {
        return RibbonGraph(std::move(rotations), std::move(edges));
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("ribbon graph: ") + e.what());
    }
}

Json to_json(const BigInt& value) {
    if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max())
        return Json(static_cast<std::int64_t>(value));
    return Json(value.str());
}

Json to_json(const IntPolynomial& poly) {
    Json coefficients = Json::array();
    for (const BigInt& c : poly.coefficients()) coefficients.push_back(to_json(c));
    return Json{{"text", to_string(poly, "t")}, {"coefficients_ascending", std::move(coefficients)}};
}

Json to_json(const RibbonGraph& graph) {
    Json vertices = Json::array();
    for (const auto& rotation : graph.rotations()) vertices.push_back(rotation);
    Json edges = Json::array();
    for (const Edge& e : graph.edges())
        edges.push_back(Json{{"label", e.label}, {"half_edges", {e.first, e.second}}, {"sign", e.sign}});
    return Json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

Json to_json(const FramedChordDiagram& diagram) {
    Json chords = Json::array();
    for (const Chord& c : diagram.chords()) chords.push_back(Json{{"a", c.a}, {"b", c.b}, {"framing", c.framing}});
    return chords;
}

Json to_json(const SetSystem& system) {
    Json feasible = Json::array();
    for (ElementMask f : system.feasible()) feasible.push_back(system.elements_of(f));
    return Json{{"ground", system.ground()}, {"feasible", std::move(feasible)}};
}

}  // namespace qtree
