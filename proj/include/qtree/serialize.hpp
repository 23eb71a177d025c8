#pragma once

#include "qtree/bigint.hpp"
#include "qtree/chord_diagram.hpp"
#include "qtree/delta_matroid.hpp"
#include "qtree/polynomial.hpp"
#include "qtree/ribbon_graph.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace qtree {

using Json = nlohmann::ordered_json;

/// Ribbon-graph text format, one line per vertex then one per edge:
///
///     v 0 2 1 3
///     1: 0 1 +
///     2: 2 3 -
///
/// A bare vertex is a lone "v". Blank lines and '#' comments are skipped.
std::string format_ribbon_graph(const RibbonGraph& graph);
RibbonGraph parse_ribbon_graph(std::string_view text);

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json to_json(const BigInt& value);
Json to_json(const IntPolynomial& poly);
Json to_json(const RibbonGraph& graph);
Json to_json(const FramedChordDiagram& diagram);
Json to_json(const SetSystem& system);

template <typename Derived>
Json matrix_to_json(const Eigen::MatrixBase<Derived>& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(BigInt(m(i, j))));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// One line per row, entries separated by commas.
template <typename Derived>
std::string matrix_to_csv(const Eigen::MatrixBase<Derived>& m) {
    std::string out;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) out += ',';
            out += BigInt(m(i, j)).str();
        }
        out += '\n';
    }
    return out;
}

}  // namespace qtree
