#pragma once

#include "qtree/bigint.hpp"
#include "qtree/ribbon_graph.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qtree {

/// One chord as an ordered pair of circle positions (1-based) plus framing.
struct Chord {
    int a = 0;
    int b = 0;
    int framing = 0;  ///< 1 for a non-orientable loop

    friend bool operator==(const Chord&, const Chord&) = default;
};

/// 2n points on a circle paired by n framed chords; chord i corresponds to
/// the i-th edge label of the source bouquet.
class FramedChordDiagram {
public:
    FramedChordDiagram() = default;
    /// Throws std::invalid_argument unless the endpoints are exactly 1..2n
    /// and every framing is 0 or 1.
    explicit FramedChordDiagram(std::vector<Chord> chords);

    std::size_t size() const noexcept { return chords_.size(); }
    const std::vector<Chord>& chords() const noexcept { return chords_; }
    const Chord& operator[](std::size_t i) const { return chords_.at(i); }

    /// Same diagram with chord i's ordered pair reversed.
    FramedChordDiagram with_reversed(std::size_t i) const;

    friend bool operator==(const FramedChordDiagram&, const FramedChordDiagram&) = default;

private:
    std::vector<Chord> chords_;
};

/// Positions follow the bouquet's rotation; chord i = (first, second)
/// occurrence of the i-th label; framing 1 iff the loop is twisted.
FramedChordDiagram chord_diagram_from_bouquet(const Bouquet& bouquet);

/// True iff exactly one endpoint of chord j lies strictly between the
/// endpoints of chord i. Throws std::out_of_range; i == j is an error.
bool interlaces(const FramedChordDiagram& diagram, std::size_t i, std::size_t j);

/// Diagonal = framing. For interlaced i < j the entry is +1 when the cyclic
/// order is a_i, a_j, b_i, b_j and -1 when it is a_i, b_j, b_i, a_j; the
/// lower triangle is the negated transpose.
SignMatrix intersection_matrix(const FramedChordDiagram& diagram);
SignMatrix intersection_matrix(const Bouquet& bouquet);

/// Interlacement graph as 0-based chord index pairs (i < j), sorted.
std::vector<std::pair<int, int>> intersection_graph(const FramedChordDiagram& diagram);

/// "n; a1 b1 f1; a2 b2 f2; ..."
std::string format_chord_diagram(const FramedChordDiagram& diagram);
FramedChordDiagram parse_chord_diagram(std::string_view text);

}  // namespace qtree
