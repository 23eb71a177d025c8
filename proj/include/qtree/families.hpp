#pragma once

#include "qtree/bigint.hpp"
#include "qtree/polynomial.hpp"
#include "qtree/ribbon_graph.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace qtree {

// ---------------------------------------------------------------------------
// Integer sequences

/// f_0 = 0, f_1 = f_2 = 1, f_n = f_{n-1} + f_{n-2}.
BigInt fibonacci(int n);
/// l_0 = 2, l_1 = 1, l_2 = 3, same recurrence.
BigInt lucas(int n);
/// a_1 = a_2 = 1, a_n = a_{n-1} + a_{n-2} + 1 - (-1)^n. Requires n >= 1.
BigInt associated_mersenne(int n);

/// Cached prefix of the three sequences, computed by their recurrences.
class SequenceTable {
public:
    explicit SequenceTable(int max_n);

    int max_n() const noexcept { return static_cast<int>(fib_.size()) - 1; }
    const BigInt& fib(int n) const { return fib_.at(static_cast<std::size_t>(n)); }
    const BigInt& lucas(int n) const { return lucas_.at(static_cast<std::size_t>(n)); }
    /// Index 0 is unused and holds 0.
    const BigInt& mersenne_assoc(int n) const { return mersenne_.at(static_cast<std::size_t>(n)); }

private:
    std::vector<BigInt> fib_;
    std::vector<BigInt> lucas_;
    std::vector<BigInt> mersenne_;
};

// ---------------------------------------------------------------------------
// Polynomial sequences

/// f_0(x) = 0, f_1(x) = 1, f_{n+1}(x) = x f_n(x) + f_{n-1}(x).
IntPolynomial fibonacci_poly(int n);
/// l_n(x) = f_{n+1}(x) + f_{n-1}(x) for n >= 1, so l_1(x) = x.
IntPolynomial lucas_poly(int n);

// ---------------------------------------------------------------------------
// Bouquet families

enum class FamilyId { F, W, Fp, F1, Fp1, Fpn, W1 };

inline constexpr std::array<FamilyId, 7> kAllFamilies = {FamilyId::F,  FamilyId::W,   FamilyId::Fp, FamilyId::F1,
                                                         FamilyId::Fp1, FamilyId::Fpn, FamilyId::W1};

std::string to_string(FamilyId id);
/// Accepts the CLI names F, W, Fp, F1, Fp1, Fpn, W1; throws ParseError.
FamilyId parse_family(std::string_view name);

/// Smallest n for which the family is defined.
int family_min_n(FamilyId id);

/// Signed rotation tokens of the n-th member; throws std::out_of_range
/// below family_min_n.
std::vector<int> family_tokens(FamilyId id, int n);
Bouquet make_family(FamilyId id, int n);

/// Closed-form quasi-tree count.
BigInt predicted_kappa(FamilyId id, int n);

/// Quasi-tree count from the family's own two-term recursion and base cases.
BigInt delcon_kappa(FamilyId id, int n);

/// True for the families with a known closed form for det(tI - A).
bool has_predicted_charpoly(FamilyId id);

/// Closed form of det(tI - A) for the family's intersection matrix. Throws
/// std::invalid_argument for W and std::out_of_range below the range.
IntPolynomial predicted_charpoly(FamilyId id, int n);

}  // namespace qtree
