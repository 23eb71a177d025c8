#include "qtree/matrix_quasi_tree.hpp"

#include "qtree/chord_diagram.hpp"
#include "qtree/errors.hpp"
#include "qtree/linalg.hpp"

namespace qtree {

IntMatrix identity_plus_intersection(const Bouquet& bouquet) {
    const SignMatrix a = intersection_matrix(bouquet);
    IntMatrix m = a.cast<BigInt>();
    for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, i) += 1;
    return m;
}

bool determinant_formula_applies(const Bouquet& bouquet) {
    return bouquet.num_non_orientable_loops() <= 1;
}

BigInt kappa_by_determinant(const Bouquet& bouquet) {
    if (!determinant_formula_applies(bouquet))
        throw EligibilityError(
            "determinant method refused: det(I+A(B)) counts quasi-trees only for orientable "
            "bouquets or bouquets with exactly one non-orientable loop; this bouquet has " +
            std::to_string(bouquet.num_non_orientable_loops()) + " non-orientable loops");
    return unchecked_determinant(bouquet);
}

BigInt unchecked_determinant(const Bouquet& bouquet) {
    return det_exact(identity_plus_intersection(bouquet));
}

}  // namespace qtree
