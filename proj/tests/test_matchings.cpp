#include "qtree/chord_diagram.hpp"
#include "qtree/errors.hpp"
#include "qtree/families.hpp"
#include "qtree/matchings.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace qtree;

TEST(SimpleGraph, RejectsLoopsAndParallelEdges) {
    EXPECT_THROW(SimpleGraph(2, {{0, 0}}), std::invalid_argument);
    EXPECT_THROW(SimpleGraph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    EXPECT_THROW(SimpleGraph(2, {{0, 2}}), std::invalid_argument);
}

TEST(GridProduct, SmallCases) {
    const SimpleGraph rung = grid_product(path_graph(1));
    EXPECT_EQ(rung, SimpleGraph(2, {{0, 1}}));
    const SimpleGraph square = grid_product(path_graph(2));
    EXPECT_EQ(square.num_vertices(), 4);
    EXPECT_EQ(square.edges().size(), 4u);
    for (int v = 0; v < 4; ++v) EXPECT_EQ(square.neighbours(v).size(), 2u);
}

TEST(GridProduct, CaterpillarOfSeven) {
    const SimpleGraph g = grid_product(caterpillar(7));
    EXPECT_EQ(g.num_vertices(), 14);
    EXPECT_EQ(g.edges().size(), 2u * 6u + 7u);
}

TEST(Caterpillar, IsTheNestedFamilyInterlacementGraph) {
    for (int n = 3; n <= 12; ++n) {
        const auto pairs = intersection_graph(chord_diagram_from_bouquet(make_family(FamilyId::Fp, n)));
        EXPECT_EQ(caterpillar(n).edges(), pairs) << n;
    }
    EXPECT_THROW(caterpillar(2), std::out_of_range);
}

TEST(PerfectMatchings, SmallGraphs) {
    EXPECT_EQ(count_perfect_matchings(SimpleGraph(2, {{0, 1}})), BigInt(1));
    EXPECT_EQ(count_perfect_matchings(SimpleGraph(0, {})), BigInt(1));
    EXPECT_EQ(count_perfect_matchings(path_graph(3)), BigInt(0));
    EXPECT_EQ(count_perfect_matchings(grid_product(path_graph(3))), BigInt(3));
    // K4 has three perfect matchings.
    EXPECT_EQ(count_perfect_matchings(SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})), BigInt(3));
}

TEST(PerfectMatchings, LadderIsFibonacci) {
    for (int n = 1; n <= 12; ++n) EXPECT_EQ(count_perfect_matchings(grid_product(path_graph(n))), fibonacci(n + 1));
}

TEST(PerfectMatchings, CaterpillarLadderIsLucas) {
    for (int n = 3; n <= 12; ++n) {
        const BigInt pf = count_perfect_matchings(grid_product(caterpillar(n)));
        EXPECT_EQ(pf, lucas(n - 1)) << n;
        EXPECT_EQ(pf, BigInt(quasi_tree_count(make_family(FamilyId::Fp, n)))) << n;
        EXPECT_EQ(pf, count_perfect_matchings(grid_product(path_graph(n - 1))) +
                          count_perfect_matchings(grid_product(path_graph(n - 3))))
            << n;
    }
}

TEST(PerfectMatchings, InvariantUnderRelabelling) {
    std::mt19937_64 rng(71);
    for (int n = 3; n <= 10; ++n) {
        const SimpleGraph g = grid_product(caterpillar(n));
        std::vector<int> perm(static_cast<std::size_t>(g.num_vertices()));
        std::iota(perm.begin(), perm.end(), 0);
        for (int trial = 0; trial < 5; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            EXPECT_EQ(count_perfect_matchings(relabel(g, perm)), count_perfect_matchings(g));
        }
    }
}

TEST(EdgeList, RoundTrip) {
    const SimpleGraph g = grid_product(caterpillar(5));
    EXPECT_EQ(parse_edge_list(format_edge_list(g)), g);
    EXPECT_EQ(parse_edge_list("# ladder\n0 1\n\n1 2 # tail\n"), path_graph(3));
    EXPECT_THROW(parse_edge_list("0\n"), ParseError);
    EXPECT_THROW(parse_edge_list("0 1 2\n"), ParseError);
    EXPECT_THROW(parse_edge_list("1 1\n"), ParseError);
}
