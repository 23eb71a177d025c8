#pragma once

#include "qtree/bigint.hpp"
#include "qtree/polynomial.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qtree {

namespace detail {

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* what) {
    if (m.rows() != m.cols()) throw std::invalid_argument(std::string(what) + ": matrix is not square");
}

}  // namespace detail

/// Fraction-free (Bareiss) determinant over an exact ring where every
/// division performed is exact. Row swaps are used only to avoid a zero pivot.
template <typename Scalar>
Scalar bareiss_determinant(DenseMatrix<Scalar> a) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("determinant: matrix is not square");
    Scalar sign(1), previous(1);
    for (Eigen::Index k = 0; k < n; ++k) {
        if (a(k, k) == 0) {
            Eigen::Index pivot = k + 1;
            while (pivot < n && a(pivot, k) == 0) ++pivot;
            if (pivot == n) return Scalar(0);
            a.row(k).swap(a.row(pivot));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
            a(i, k) = 0;
        }
        previous = a(k, k);
    }
    return n == 0 ? Scalar(1) : Scalar(sign * a(n - 1, n - 1));
}

/// Exact determinant of an integer matrix of any scalar type; det of the
/// 0x0 matrix is 1.
template <typename Derived>
BigInt det_exact(const Eigen::MatrixBase<Derived>& m) {
    detail::require_square(m, "det_exact");
    return bareiss_determinant<BigInt>(m.template cast<BigInt>());
}

/// det(M[X]) for the index set X (0-based rows/columns).
template <typename Derived>
BigInt principal_minor(const Eigen::MatrixBase<Derived>& m, std::span<const Eigen::Index> subset) {
    detail::require_square(m, "principal_minor");
    const Eigen::Index k = static_cast<Eigen::Index>(subset.size());
    IntMatrix sub(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        if (subset[i] < 0 || subset[i] >= m.rows()) throw std::out_of_range("principal_minor: unknown index");
        for (Eigen::Index j = 0; j < k; ++j) {
            if (subset[j] < 0 || subset[j] >= m.rows())
                throw std::out_of_range("principal_minor: unknown index");
            sub(i, j) = BigInt(m(subset[i], subset[j]));
        }
    }
    return bareiss_determinant<BigInt>(std::move(sub));
}

/// det(M[X]) with X given as a bitmask over row indices.
template <typename Derived>
BigInt principal_minor(const Eigen::MatrixBase<Derived>& m, std::uint64_t subset) {
    detail::require_square(m, "principal_minor");
    if (m.rows() < 64 && (subset >> m.rows()) != 0) throw std::out_of_range("principal_minor: unknown index");
    std::vector<Eigen::Index> idx;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        if (subset >> i & 1) idx.push_back(i);
    return principal_minor(m, std::span<const Eigen::Index>(idx));
}

/// E_k(M): sum of all principal minors of size k; E_0 = 1.
template <typename Derived>
BigInt sum_principal_minors(const Eigen::MatrixBase<Derived>& m, Eigen::Index k) {
    detail::require_square(m, "sum_principal_minors");
    const Eigen::Index n = m.rows();
    if (k < 0 || k > n) throw std::out_of_range("sum_principal_minors: k out of range");
    if (n > 30) throw std::invalid_argument("sum_principal_minors: dimension too large for enumeration");
    if (k == 0) return BigInt(1);
    BigInt total(0);
    const std::uint64_t limit = std::uint64_t{1} << n;
    // Gosper's hack walks the k-subsets in increasing mask order.
    for (std::uint64_t x = (std::uint64_t{1} << k) - 1; x < limit;) {
        total += principal_minor(m, x);
        const std::uint64_t low = x & (~x + 1);
        const std::uint64_t ripple = x + low;
        x = (((ripple ^ x) >> 2) / low) | ripple;
    }
    return total;
}

/// det(tI - M) by fraction-free elimination over Z[t]. The pivots are
/// leading principal minors of tI - M, which are monic, so no pivoting is
/// needed and every division is exact.
template <typename Derived>
IntPolynomial char_poly(const Eigen::MatrixBase<Derived>& m) {
    detail::require_square(m, "char_poly");
    const Eigen::Index n = m.rows();
    std::vector<std::vector<IntPolynomial>> a(n, std::vector<IntPolynomial>(n));
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            a[i][j] = IntPolynomial::constant(-BigInt(m(i, j)));
            if (i == j) a[i][j] += IntPolynomial::variable();
        }
    IntPolynomial previous = IntPolynomial::constant(BigInt(1));
    for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j)
                a[i][j] = exact_divide(a[i][j] * a[k][k] - a[i][k] * a[k][j], previous);
            a[i][k] = IntPolynomial{};
        }
        previous = a[k][k];
    }
    return n == 0 ? IntPolynomial::constant(BigInt(1)) : a[n - 1][n - 1];
}

/// det(tI - M) = sum_k (-1)^k E_k(M) t^(n-k), by explicit minor enumeration.
template <typename Derived>
IntPolynomial char_poly_by_minors(const Eigen::MatrixBase<Derived>& m) {
    detail::require_square(m, "char_poly_by_minors");
    const Eigen::Index n = m.rows();
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (Eigen::Index k = 0; k <= n; ++k) {
        BigInt e = sum_principal_minors(m, k);
        c[static_cast<std::size_t>(n - k)] = (k % 2 == 0) ? e : BigInt(-e);
    }
    return IntPolynomial(std::move(c));
}

/// det(I + M) = sum over all X of det(M[X]), by enumeration.
template <typename Derived>
BigInt sum_all_principal_minors(const Eigen::MatrixBase<Derived>& m) {
    detail::require_square(m, "sum_all_principal_minors");
    BigInt total(0);
    for (Eigen::Index k = 0; k <= m.rows(); ++k) total += sum_principal_minors(m, k);
    return total;
}

}  // namespace qtree
