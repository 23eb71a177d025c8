#pragma once

#include "qtree/bigint.hpp"
#include "qtree/ribbon_graph.hpp"

#include <string>

namespace qtree {

/// I + A(B) over BigInt.
IntMatrix identity_plus_intersection(const Bouquet& bouquet);

/// The determinant formula counts quasi-trees of orientable bouquets and of
/// bouquets with exactly one non-orientable loop; nothing else.
bool determinant_formula_applies(const Bouquet& bouquet);

/// det(I + A(B)) = kappa(B). Throws EligibilityError (naming the hypothesis)
/// when B has two or more non-orientable loops.
BigInt kappa_by_determinant(const Bouquet& bouquet);

/// det(I + A(B)) without the hypothesis check.
BigInt unchecked_determinant(const Bouquet& bouquet);

}  // namespace qtree
