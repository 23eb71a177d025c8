#include "qtree/errors.hpp"
#include "qtree/families.hpp"
#include "qtree/random.hpp"
#include "qtree/serialize.hpp"

#include <gtest/gtest.h>

using namespace qtree;

TEST(RibbonGraphText, Format) {
    const RibbonGraph g({{0, 2}, {1, 3}, {}}, {Edge{1, 0, 1, 1}, Edge{2, 2, 3, -1}});
    EXPECT_EQ(format_ribbon_graph(g), "v 0 2\nv 1 3\nv\n1: 0 1 +\n2: 2 3 -\n");
}

TEST(RibbonGraphText, RoundTripOnRandomGraphs) {
    Rng rng(81);
    for (int trial = 0; trial < 50; ++trial) {
        const RibbonGraph g = random_ribbon_graph(rng, 1 + trial % 4, 3 + trial % 4);
        EXPECT_EQ(parse_ribbon_graph(format_ribbon_graph(g)), g);
    }
}

TEST(RibbonGraphText, AcceptsCommentsAndNumericSigns) {
    const RibbonGraph g = parse_ribbon_graph("# one twisted loop\nv 0 1\n\n1: 0 1 -1\n");
    EXPECT_EQ(g, parse_signed_rotation("-1,1").graph());
}

TEST(RibbonGraphText, RejectsMalformedInput) {
    EXPECT_THROW(parse_ribbon_graph(""), ParseError);
    EXPECT_THROW(parse_ribbon_graph("v 0 1\n1: 0 1 *\n"), ParseError);
    EXPECT_THROW(parse_ribbon_graph("v 0 1\n1 0 1 +\n"), ParseError);
    EXPECT_THROW(parse_ribbon_graph("v 0 x\n"), ParseError);
    EXPECT_THROW(parse_ribbon_graph("v 0 1\n1: 0 0 +\n"), ParseError);
}

TEST(Json, BigIntegersBecomeStrings) {
    EXPECT_EQ(to_json(BigInt(42)).dump(), "42");
    EXPECT_EQ(to_json(BigInt(-7)).dump(), "-7");
    EXPECT_EQ(to_json(fibonacci(100)).dump(), "\"354224848179261915075\"");
}

TEST(Json, PolynomialAndSetSystem) {
    EXPECT_EQ(to_json(predicted_charpoly(FamilyId::Fp, 3)).dump(),
              R"({"text":"t^3 + 2*t","coefficients_ascending":[0,2,0,1]})");
    const SetSystem s({1, 2}, {0, 3});
    EXPECT_EQ(to_json(s).dump(), R"({"ground":[1,2],"feasible":[[],[1,2]]})");
}

TEST(Json, GraphFields) {
    const Json j = to_json(parse_signed_rotation("-1,1").graph());
    EXPECT_EQ(j.dump(), R"({"vertices":[[0,1]],"edges":[{"label":1,"half_edges":[0,1],"sign":-1}]})");
}

TEST(MatrixOutput, CsvAndJson) {
    Eigen::MatrixXi m(2, 2);
    m << 0, 1, -1, 1;
    EXPECT_EQ(matrix_to_csv(m), "0,1\n-1,1\n");
    EXPECT_EQ(matrix_to_json(m).dump(), "[[0,1],[-1,1]]");
}
