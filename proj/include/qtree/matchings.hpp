#pragma once

#include "qtree/bigint.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qtree {

/// Undirected graph on vertices 0..n-1 without loops or parallel edges.
class SimpleGraph {
public:
    SimpleGraph() = default;
    /// Throws std::invalid_argument on a loop, a repeated edge or an
    /// endpoint outside 0..n-1.
    SimpleGraph(int num_vertices, std::vector<std::pair<int, int>> edges);

    int num_vertices() const noexcept { return n_; }
    /// Each edge as (u, v) with u < v, sorted.
    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
    const std::vector<int>& neighbours(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    bool adjacent(int u, int v) const;

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
};

/// P_n: vertices 0..n-1 in a line.
SimpleGraph path_graph(int n);

/// T_n (n >= 3): the path 2, 3, ..., n-1 with two leaves 0 and 1 hanging
/// off vertex 2. It is the interlacement graph of the nested-start family.
SimpleGraph caterpillar(int n);

/// P_2 x G: vertex v of G becomes v and v + |V(G)|, joined by a rung.
SimpleGraph grid_product(const SimpleGraph& graph);

/// Same graph with vertex v renamed perm[v].
SimpleGraph relabel(const SimpleGraph& graph, const std::vector<int>& perm);

/// Number of perfect matchings, by branching on the lowest unmatched vertex.
/// Odd vertex counts give 0. Throws std::invalid_argument above 64 vertices.
BigInt count_perfect_matchings(const SimpleGraph& graph);

/// One "u v" pair per line. Blank lines and '#' comments are skipped; the
/// vertex count is one more than the largest id.
std::string format_edge_list(const SimpleGraph& graph);
SimpleGraph parse_edge_list(std::string_view text);

}  // namespace qtree
