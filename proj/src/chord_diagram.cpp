#include "qtree/chord_diagram.hpp"

#include "qtree/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace qtree {

FramedChordDiagram::FramedChordDiagram(std::vector<Chord> chords) : chords_(std::move(chords)) {
    const int points = static_cast<int>(2 * chords_.size());
    std::vector<bool> used(points + 1, false);
    for (const auto& c : chords_) {
        for (int p : {c.a, c.b}) {
            if (p < 1 || p > points || used[p])
                throw std::invalid_argument("chord diagram: endpoints must be exactly 1.." +
                                            std::to_string(points));
            used[p] = true;
        }
        if (c.framing != 0 && c.framing != 1)
            throw std::invalid_argument("chord diagram: framing must be 0 or 1");
    }
}

FramedChordDiagram FramedChordDiagram::with_reversed(std::size_t i) const {
    std::vector<Chord> chords = chords_;
    std::swap(chords.at(i).a, chords.at(i).b);
    return FramedChordDiagram(std::move(chords));
}

FramedChordDiagram chord_diagram_from_bouquet(const Bouquet& bouquet) {
    const RibbonGraph& g = bouquet.graph();
    std::vector<int> position(g.num_half_edges());
    const auto& rotation = g.rotations().front();
    for (std::size_t i = 0; i < rotation.size(); ++i) position[rotation[i]] = static_cast<int>(i) + 1;

    std::vector<Chord> chords;
    for (const auto& e : g.edges()) {
        int a = position[e.first], b = position[e.second];
        if (a > b) std::swap(a, b);
        chords.push_back({a, b, e.sign < 0 ? 1 : 0});
    }
    return FramedChordDiagram(std::move(chords));
}

namespace {

bool strictly_between(int x, int lo, int hi) {
    if (lo > hi) std::swap(lo, hi);
    return lo < x && x < hi;
}

}  // namespace

bool interlaces(const FramedChordDiagram& diagram, std::size_t i, std::size_t j) {
    if (i >= diagram.size() || j >= diagram.size()) throw std::out_of_range("chord index out of range");
    if (i == j) throw std::out_of_range("interlacement needs two distinct chords");
    const Chord& ci = diagram[i];
    const Chord& cj = diagram[j];
    return strictly_between(cj.a, ci.a, ci.b) != strictly_between(cj.b, ci.a, ci.b);
}

SignMatrix intersection_matrix(const FramedChordDiagram& diagram) {
    const auto n = static_cast<Eigen::Index>(diagram.size());
    const int points = static_cast<int>(2 * n);
    SignMatrix a = SignMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Chord& ci = diagram[i];
        a(i, i) = ci.framing;
        // Offsets along the circle measured from a_i.
        const auto offset = [&](int p) { return ((p - ci.a) % points + points) % points; };
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if (!interlaces(diagram, i, j)) continue;
            const Chord& cj = diagram[j];
            const int bi = offset(ci.b), aj = offset(cj.a), bj = offset(cj.b);
            a(i, j) = (aj < bi && bi < bj) ? 1 : -1;
            a(j, i) = -a(i, j);
        }
    }
    return a;
}

SignMatrix intersection_matrix(const Bouquet& bouquet) {
    return intersection_matrix(chord_diagram_from_bouquet(bouquet));
}

std::vector<std::pair<int, int>> intersection_graph(const FramedChordDiagram& diagram) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < diagram.size(); ++i)
        for (std::size_t j = i + 1; j < diagram.size(); ++j)
            if (interlaces(diagram, i, j)) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return out;
}

std::string format_chord_diagram(const FramedChordDiagram& diagram) {
    std::ostringstream os;
    os << diagram.size();
    for (const auto& c : diagram.chords()) os << "; " << c.a << ' ' << c.b << ' ' << c.framing;
    return os.str();
}

FramedChordDiagram parse_chord_diagram(std::string_view text) {
    std::vector<std::string> parts;
    std::string current;
    for (char ch : text) {
        if (ch == ';') {
            parts.push_back(current);
            current.clear();
        } else {
            current += ch;
        }
    }
    parts.push_back(current);

    std::istringstream head(parts.front());
    std::size_t n = 0;
    if (!(head >> n)) throw ParseError("chord diagram: missing chord count");
    if (parts.size() != n + 1)
        throw ParseError("chord diagram: expected " + std::to_string(n) + " chords");
    std::vector<Chord> chords;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        std::istringstream is(parts[i]);
        Chord c;
        std::string extra;
        if (!(is >> c.a >> c.b >> c.framing) || (is >> extra))
            throw ParseError("chord diagram: bad chord '" + parts[i] + "'");
        chords.push_back(c);
    }
    try {
        return FramedChordDiagram(std::move(chords));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

}  // namespace qtree
