#pragma once

#include "qtree/bigint.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qtree {

/// Dense univariate polynomial over an exact ring, coefficients in
/// ascending degree. The highest stored coefficient is never zero; the zero
/// polynomial has no coefficients.
template <typename Scalar>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Scalar> ascending) : c_(std::move(ascending)) { trim(); }
    Polynomial(std::initializer_list<Scalar> ascending) : c_(ascending) { trim(); }

    static Polynomial constant(Scalar value) { return Polynomial(std::vector<Scalar>{std::move(value)}); }
    static Polynomial monomial(Scalar coefficient, std::size_t degree) {
        std::vector<Scalar> c(degree + 1, Scalar(0));
        c[degree] = std::move(coefficient);
        return Polynomial(std::move(c));
    }
    static Polynomial variable() { return monomial(Scalar(1), 1); }

    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Scalar>& coefficients() const noexcept { return c_; }
    Scalar coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(0); }
    Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }

    Scalar operator()(const Scalar& x) const {
        Scalar acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const Scalar& s) {
        for (auto& v : c_) v *= s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) {
        for (auto& v : a.c_) v = -v;
        return a;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
    friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back() == Scalar(0)) c_.pop_back();
    }

    std::vector<Scalar> c_;
};

using IntPolynomial = Polynomial<BigInt>;

/// Quotient of an exact division; throws std::domain_error when `divisor`
/// does not divide `dividend` over the coefficient ring.
template <typename Scalar>
Polynomial<Scalar> exact_divide(Polynomial<Scalar> dividend, const Polynomial<Scalar>& divisor) {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    const int dd = divisor.degree();
    if (dividend.degree() < dd) {
        if (!dividend.is_zero()) throw std::domain_error("polynomial division is not exact");
        return {};
    }
    std::vector<Scalar> quotient(dividend.degree() - dd + 1, Scalar(0));
    const Scalar& lead = divisor.leading();
    while (!dividend.is_zero() && dividend.degree() >= dd) {
        const Scalar top = dividend.leading();
        if (top % lead != 0) throw std::domain_error("polynomial division is not exact");
        const Scalar q = top / lead;
        const auto shift = static_cast<std::size_t>(dividend.degree() - dd);
        quotient[shift] = q;
        dividend -= Polynomial<Scalar>::monomial(q, shift) * divisor;
    }
    if (!dividend.is_zero()) throw std::domain_error("polynomial division is not exact");
    return Polynomial<Scalar>(std::move(quotient));
}

/// Human-readable form, highest degree first: "t^3 + 2*t", "t^2 - t + 1".
template <typename Scalar>
std::string to_string(const Polynomial<Scalar>& p, std::string_view var = "t") {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        Scalar c = p.coefficient(static_cast<std::size_t>(k));
        if (c == 0) continue;
        const bool negative = c < 0;
        if (negative) c = -c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (k == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c << '*';
        os << var;
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

}  // namespace qtree
