#pragma once

#include "qtree/ribbon_graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qtree {

/// Subset of a set system's ground set; bit k is the k-th ground element.
using ElementMask = std::uint32_t;

inline constexpr std::size_t kMaxGround = 24;

/// A ground set with a family of feasible subsets, stored as a sorted,
/// duplicate-free array of masks.
class SetSystem {
public:
    SetSystem() = default;
    /// Throws std::invalid_argument on repeated ground elements, more than
    /// kMaxGround elements, or a feasible mask outside the ground set.
    SetSystem(std::vector<int> ground, std::vector<ElementMask> feasible);

    const std::vector<int>& ground() const noexcept { return ground_; }
    const std::vector<ElementMask>& feasible() const noexcept { return feasible_; }
    std::size_t num_feasible() const noexcept { return feasible_.size(); }
    bool proper() const noexcept { return !feasible_.empty(); }
    bool contains(ElementMask set) const;

    ElementMask full_mask() const noexcept { return (ElementMask{1} << ground_.size()) - 1; }
    /// Position of `element` in the ground set; throws std::out_of_range.
    std::size_t index_of(int element) const;
    ElementMask mask_of(std::span<const int> elements) const;
    std::vector<int> elements_of(ElementMask set) const;

    friend bool operator==(const SetSystem&, const SetSystem&) = default;

private:
    std::vector<int> ground_;
    std::vector<ElementMask> feasible_;
};

/// D(G): ground = edge labels, feasible = edge sets of spanning quasi-trees.
SetSystem from_ribbon_graph(const RibbonGraph& graph, unsigned threads = 1);

/// A witness that the symmetric exchange axiom fails.
struct ExchangeViolation {
    ElementMask x = 0;
    ElementMask y = 0;
    int u = 0;
};

std::optional<ExchangeViolation> find_exchange_violation(const SetSystem& system);

/// Proper and satisfying the symmetric exchange axiom. An improper system
/// yields false.
bool is_delta_matroid(const SetSystem& system);

/// All feasible sets share one parity (vacuously true when improper).
bool is_even(const SetSystem& system);

/// D * A = (E, {A xor X : X feasible}).
SetSystem twist(const SetSystem& system, ElementMask subset);

/// D + e = F xor {F u e : F feasible, e not in F}.
SetSystem loop_complementation(const SetSystem& system, int element);

/// Sliding a over b: F xor {F u a : F u b feasible, F in E - {a,b}}.
SetSystem handle_slide(const SetSystem& system, int a, int b);

/// Exchanging handle ends of a and b: F xor {F u {a,b} : F feasible, F in E - {a,b}}.
SetSystem exchange_handle_ends(const SetSystem& system, int a, int b);

/// Exchange followed by slide, written with both correction terms taken from
/// the original family.
SetSystem exchange_then_slide(const SetSystem& system, int a, int b);

struct FourTermResult {
    std::size_t original = 0;        ///< |F|
    std::size_t slid = 0;            ///< |F~_ab|
    std::size_t exchanged = 0;       ///< |F'_ab|
    std::size_t exchanged_slid = 0;  ///< |F~'_ab|
    bool holds = false;              ///< |F| + |F~'| - |F'| - |F~| == 0
};

FourTermResult four_term_check(const SetSystem& system, int a, int b);

/// First line: ground elements separated by spaces. Then one feasible set per
/// line, "-" for the empty set. Sets are listed in increasing mask order.
std::string format_set_system(const SetSystem& system);
SetSystem parse_set_system(std::string_view text);

// ---------------------------------------------------------------------------
// Ribbon-level moves on bouquets with neighbouring ends

/// True iff some end of `a` is cyclically adjacent to some end of `b` in the
/// rotation.
bool have_neighbouring_ends(const Bouquet& bouquet, int a, int b);

/// Slides the end of `a` that neighbours `b` along b's ribbon to b's other
/// end; crossing a twisted `b` adds a half-twist to `a`. Throws
/// std::invalid_argument without neighbouring ends or when a == b.
Bouquet ribbon_handle_slide(const Bouquet& bouquet, int a, int b);

/// Swaps the first pair of neighbouring ends of `a` and `b`.
Bouquet ribbon_exchange_handle_ends(const Bouquet& bouquet, int a, int b);

}  // namespace qtree
