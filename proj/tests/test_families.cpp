#include "qtree/chord_diagram.hpp"
#include "qtree/errors.hpp"
#include "qtree/families.hpp"
#include "qtree/linalg.hpp"
#include "qtree/matrix_quasi_tree.hpp"

#include <gtest/gtest.h>

using namespace qtree;

// ---------------------------------------------------------------------------
// Sequences

TEST(Sequences, OpeningTerms) {
    const std::vector<int> fib{0, 1, 1, 2, 3, 5, 8, 13, 21, 34};
    const std::vector<int> luc{2, 1, 3, 4, 7, 11, 18, 29, 47, 76};
    for (int i = 0; i < 10; ++i) {
        EXPECT_EQ(fibonacci(i), BigInt(fib[i]));
        EXPECT_EQ(lucas(i), BigInt(luc[i]));
    }
    const std::vector<int> mersenne{1, 1, 4, 5, 11, 16, 29, 45};
    for (int i = 1; i <= 8; ++i) EXPECT_EQ(associated_mersenne(i), BigInt(mersenne[i - 1])) << i;
}

TEST(Sequences, RangeErrors) {
    EXPECT_THROW(fibonacci(-1), std::out_of_range);
    EXPECT_THROW(lucas(-1), std::out_of_range);
    EXPECT_THROW(associated_mersenne(0), std::out_of_range);
}

TEST(Sequences, IdentitiesUpToSixtyFour) {
    for (int n = 3; n <= 64; ++n) EXPECT_EQ(fibonacci(n) + fibonacci(n - 2), lucas(n - 1)) << n;
    for (int n = 1; n <= 64; ++n)
        EXPECT_EQ(associated_mersenne(n), lucas(n) - 1 - (n % 2 == 0 ? 1 : -1)) << n;
}

TEST(Sequences, TableMatchesFreeFunctions) {
    const SequenceTable table(90);
    EXPECT_EQ(table.max_n(), 90);
    for (int n = 1; n <= 90; ++n) {
        EXPECT_EQ(table.fib(n), fibonacci(n));
        EXPECT_EQ(table.lucas(n), lucas(n));
        EXPECT_EQ(table.mersenne_assoc(n), associated_mersenne(n));
    }
    // f_90 does not fit in 64 bits.
    EXPECT_EQ(table.fib(90).str(), "2880067194370816120");
    EXPECT_EQ(fibonacci(100).str(), "354224848179261915075");
}

// ---------------------------------------------------------------------------
// Polynomials

TEST(FibonacciPoly, SmallCases) {
    EXPECT_TRUE(fibonacci_poly(0).is_zero());
    EXPECT_EQ(fibonacci_poly(1), IntPolynomial::constant(1));
    EXPECT_EQ(fibonacci_poly(2), IntPolynomial::variable());
    EXPECT_EQ(fibonacci_poly(5), IntPolynomial({1, 0, 3, 0, 1}));
    EXPECT_THROW(fibonacci_poly(-1), std::out_of_range);
}

TEST(LucasPoly, DisplayedCases) {
    EXPECT_EQ(lucas_poly(4), IntPolynomial({2, 0, 4, 0, 1}));
    EXPECT_EQ(lucas_poly(5), IntPolynomial({0, 5, 0, 5, 0, 1}));
    EXPECT_EQ(lucas_poly(1), IntPolynomial::variable());
    EXPECT_THROW(lucas_poly(0), std::out_of_range);
}

TEST(LucasPoly, SumOfFibonacciPolys) {
    for (int n = 3; n <= 20; ++n) EXPECT_EQ(lucas_poly(n - 1), fibonacci_poly(n) + fibonacci_poly(n - 2)) << n;
}

TEST(Polynomials, EvaluateToTheIntegerSequences) {
    for (int n = 1; n <= 30; ++n) {
        EXPECT_EQ(fibonacci_poly(n)(BigInt(1)), fibonacci(n));
        EXPECT_EQ(lucas_poly(n)(BigInt(1)), lucas(n));
    }
}

// ---------------------------------------------------------------------------
// Family generators

TEST(FamilyTokens, DisplayedInstances) {
    EXPECT_EQ(family_tokens(FamilyId::F, 4), (std::vector<int>{1, 2, 1, 3, 2, 4, 3, 4}));
    EXPECT_EQ(family_tokens(FamilyId::W, 4), (std::vector<int>{1, 4, 2, 1, 3, 2, 4, 3}));
    EXPECT_EQ(family_tokens(FamilyId::Fp, 6), (std::vector<int>{1, 2, 3, 2, 1, 4, 3, 5, 4, 6, 5, 6}));
    EXPECT_EQ(family_tokens(FamilyId::F1, 3), (std::vector<int>{-1, 2, 1, 3, 2, 3}));
    EXPECT_EQ(family_tokens(FamilyId::Fp1, 4), (std::vector<int>{-1, 2, 3, 2, 1, 4, 3, 4}));
    EXPECT_EQ(family_tokens(FamilyId::Fpn, 4), (std::vector<int>{1, 2, 3, 2, 1, 4, 3, -4}));
    EXPECT_EQ(family_tokens(FamilyId::W1, 3), (std::vector<int>{-1, 3, 2, 1, 3, 2}));
}

TEST(FamilyTokens, SmallestMembers) {
    EXPECT_TRUE(family_tokens(FamilyId::F, 0).empty());
    EXPECT_EQ(family_tokens(FamilyId::F, 1), (std::vector<int>{1, 1}));
    EXPECT_EQ(family_tokens(FamilyId::Fp, 2), (std::vector<int>{1, 2, 2, 1}));
    EXPECT_EQ(family_tokens(FamilyId::Fp1, 2), (std::vector<int>{-1, 2, 2, 1}));
}

TEST(FamilyTokens, RangesAreEnforced) {
    const std::map<FamilyId, int> lowest{{FamilyId::F, 0},  {FamilyId::W, 3},   {FamilyId::Fp, 2}, {FamilyId::F1, 1},
                                         {FamilyId::Fp1, 2}, {FamilyId::Fpn, 3}, {FamilyId::W1, 3}};
    for (const auto& [id, n] : lowest) {
        EXPECT_EQ(family_min_n(id), n);
        EXPECT_NO_THROW(make_family(id, n));
        EXPECT_THROW(make_family(id, n - 1), std::out_of_range);
        EXPECT_THROW(predicted_kappa(id, n - 1), std::out_of_range);
        EXPECT_THROW(delcon_kappa(id, n - 1), std::out_of_range);
    }
}

TEST(FamilyTokens, TwistCounts) {
    for (int n = 3; n <= 8; ++n) {
        EXPECT_EQ(make_family(FamilyId::F, n).num_non_orientable_loops(), 0u);
        EXPECT_EQ(make_family(FamilyId::W, n).num_non_orientable_loops(), 0u);
        EXPECT_EQ(make_family(FamilyId::Fp, n).num_non_orientable_loops(), 0u);
        for (FamilyId id : {FamilyId::F1, FamilyId::Fp1, FamilyId::Fpn, FamilyId::W1})
            EXPECT_EQ(make_family(id, n).num_non_orientable_loops(), 1u);
    }
}

TEST(FamilyNames, RoundTrip) {
    for (FamilyId id : kAllFamilies) EXPECT_EQ(parse_family(to_string(id)), id);
    EXPECT_THROW(parse_family("G"), ParseError);
}

// ---------------------------------------------------------------------------
// Counts

TEST(PredictedKappa, StatedValues) {
    EXPECT_EQ(predicted_kappa(FamilyId::F1, 1), BigInt(2));
    EXPECT_EQ(predicted_kappa(FamilyId::W1, 3), BigInt(6));
    EXPECT_EQ(predicted_kappa(FamilyId::W1, 4), BigInt(8));
    EXPECT_EQ(predicted_kappa(FamilyId::Fp, 2), BigInt(1));
    EXPECT_EQ(predicted_kappa(FamilyId::Fp, 3), BigInt(3));
    EXPECT_EQ(predicted_kappa(FamilyId::Fp1, 3), BigInt(5));
    EXPECT_EQ(predicted_kappa(FamilyId::F, 0), BigInt(1));
}

TEST(DelconKappa, BaseCasesAndRecursion) {
    EXPECT_EQ(delcon_kappa(FamilyId::Fp, 2), BigInt(1));
    EXPECT_EQ(delcon_kappa(FamilyId::Fp, 3), BigInt(3));
    EXPECT_EQ(delcon_kappa(FamilyId::Fp1, 2), BigInt(2));
    EXPECT_EQ(delcon_kappa(FamilyId::Fp1, 3), BigInt(5));
    EXPECT_EQ(delcon_kappa(FamilyId::W1, 5), BigInt(16));
}

TEST(FamilyCounts, AllMethodsAgree) {
    for (FamilyId id : kAllFamilies)
        for (int n = family_min_n(id); n <= 14; ++n) {
            const Bouquet b = make_family(id, n);
            const BigInt brute(quasi_tree_count(b));
            EXPECT_EQ(brute, predicted_kappa(id, n)) << to_string(id) << n;
            EXPECT_EQ(brute, delcon_kappa(id, n)) << to_string(id) << n;
            EXPECT_EQ(brute, kappa_by_determinant(b)) << to_string(id) << n;
        }
}

TEST(FamilyCounts, ClosedFormsMatchRecursionsFarOut) {
    for (FamilyId id : kAllFamilies)
        for (int n = family_min_n(id); n <= 80; ++n)
            EXPECT_EQ(predicted_kappa(id, n), delcon_kappa(id, n)) << to_string(id) << n;
}

TEST(FamilyCounts, DeterminantFarBeyondEnumeration) {
    for (FamilyId id : kAllFamilies)
        EXPECT_EQ(kappa_by_determinant(make_family(id, 60)), predicted_kappa(id, 60)) << to_string(id);
}

// ---------------------------------------------------------------------------
// Characteristic polynomials

TEST(PredictedCharpoly, SmallCases) {
    EXPECT_EQ(to_string(predicted_charpoly(FamilyId::Fp, 3)), "t^3 + 2*t");
    EXPECT_EQ(to_string(predicted_charpoly(FamilyId::F1, 2)), "t^2 - t + 1");
    EXPECT_THROW(predicted_charpoly(FamilyId::W, 4), std::invalid_argument);
    EXPECT_FALSE(has_predicted_charpoly(FamilyId::W));
}

TEST(PredictedCharpoly, MatchesDirectComputation) {
    for (FamilyId id : kAllFamilies) {
        if (!has_predicted_charpoly(id)) continue;
        for (int n = std::max(1, family_min_n(id)); n <= 12; ++n)
            EXPECT_EQ(predicted_charpoly(id, n), char_poly(intersection_matrix(make_family(id, n))))
                << to_string(id) << n;
    }
}

TEST(PredictedCharpoly, TwoRenderingsOfTheNestedTwistFormula) {
    const IntPolynomial t = IntPolynomial::variable();
    const IntPolynomial one = IntPolynomial::constant(1);
    for (int n = 3; n <= 20; ++n)
        EXPECT_EQ(t * lucas_poly(n - 1) - fibonacci_poly(n), (t - one) * fibonacci_poly(n) + t * fibonacci_poly(n - 2))
            << n;
}

TEST(PredictedCharpoly, PathFamilyIsFibonacci) {
    for (int n = 1; n <= 12; ++n)
        EXPECT_EQ(char_poly(intersection_matrix(make_family(FamilyId::F, n))), fibonacci_poly(n + 1)) << n;
}
