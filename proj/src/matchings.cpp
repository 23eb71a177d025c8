#include "qtree/matchings.hpp"

#include "qtree/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace qtree {

SimpleGraph::SimpleGraph(int num_vertices, std::vector<std::pair<int, int>> edges)
    : n_(num_vertices), adjacency_(static_cast<std::size_t>(std::max(0, num_vertices))) {
    if (num_vertices < 0) throw std::invalid_argument("graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("graph: endpoint out of range");
        if (u == v) throw std::invalid_argument("graph: loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("graph: parallel edges");
    edges_ = std::move(edges);
    for (const auto& [u, v] : edges_) {
        adjacency_[static_cast<std::size_t>(u)].push_back(v);
        adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool SimpleGraph::adjacent(int u, int v) const {
    const auto& list = neighbours(u);
    return std::binary_search(list.begin(), list.end(), v);
}

SimpleGraph path_graph(int n) {
    if (n < 0) throw std::out_of_range("path_graph: negative length");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return SimpleGraph(n, std::move(edges));
}

SimpleGraph caterpillar(int n) {
    if (n < 3) throw std::out_of_range("caterpillar: n must be at least 3");
    std::vector<std::pair<int, int>> edges{{0, 2}, {1, 2}};
    for (int i = 2; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return SimpleGraph(n, std::move(edges));
}

SimpleGraph grid_product(const SimpleGraph& graph) {
    const int n = graph.num_vertices();
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : graph.edges()) {
        edges.emplace_back(u, v);
        edges.emplace_back(u + n, v + n);
    }
    for (int v = 0; v < n; ++v) edges.emplace_back(v, v + n);
    return SimpleGraph(2 * n, std::move(edges));
}

SimpleGraph relabel(const SimpleGraph& graph, const std::vector<int>& perm) {
    if (perm.size() != static_cast<std::size_t>(graph.num_vertices()))
        throw std::invalid_argument("relabel: permutation has the wrong size");
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : graph.edges())
        edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return SimpleGraph(graph.num_vertices(), std::move(edges));
}

namespace {

BigInt count_from(const SimpleGraph& graph, std::uint64_t unmatched) {
    if (unmatched == 0) return 1;
    const int v = std::countr_zero(unmatched);
    const std::uint64_t rest = unmatched & (unmatched - 1);
    BigInt total = 0;
    for (int w : graph.neighbours(v))
        if (rest >> w & 1) total += count_from(graph, rest & ~(std::uint64_t{1} << w));
    return total;
}

}  // namespace

BigInt count_perfect_matchings(const SimpleGraph& graph) {
    const int n = graph.num_vertices();
    if (n > 64) throw std::invalid_argument("count_perfect_matchings: more than 64 vertices");
    if (n % 2 == 1) return 0;
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return count_from(graph, all);
}

std::string format_edge_list(const SimpleGraph& graph) {
    std::ostringstream os;
    for (const auto& [u, v] : graph.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

SimpleGraph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::pair<int, int>> edges;
    int max_id = -1;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        int u = 0, v = 0;
        if (!(ls >> u)) continue;
        std::string extra;
        if (!(ls >> v) || (ls >> extra))
            throw ParseError("edge list line " + std::to_string(line_no) + ": expected \"u v\"");
        if (u < 0 || v < 0) throw ParseError("edge list line " + std::to_string(line_no) + ": negative id");
        edges.emplace_back(u, v);
        max_id = std::max({max_id, u, v});
    }
    try {
        return SimpleGraph(max_id + 1, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

}  // namespace qtree
