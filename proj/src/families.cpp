#include "qtree/families.hpp"

#include "qtree/errors.hpp"

#include <stdexcept>

namespace qtree {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::out_of_range(what);
}

BigInt minus_one_pow(int n) { return (n % 2 == 0) ? BigInt(1) : BigInt(-1); }

}  // namespace

BigInt fibonacci(int n) {
    require(n >= 0, "fibonacci: negative index");
    BigInt a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
        BigInt next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

BigInt lucas(int n) {
    require(n >= 0, "lucas: negative index");
    BigInt a = 2, b = 1;
    for (int i = 0; i < n; ++i) {
        BigInt next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

BigInt associated_mersenne(int n) {
    require(n >= 1, "associated_mersenne: index below 1");
    BigInt prev = 1, cur = 1;
    for (int i = 3; i <= n; ++i) {
        BigInt next = cur + prev + 1 - minus_one_pow(i);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

SequenceTable::SequenceTable(int max_n) {
    require(max_n >= 2, "SequenceTable: max_n below 2");
    const auto size = static_cast<std::size_t>(max_n) + 1;
    fib_.assign(size, 0);
    lucas_.assign(size, 0);
    mersenne_.assign(size, 0);
    fib_[1] = 1;
    lucas_[0] = 2;
    lucas_[1] = 1;
    mersenne_[1] = mersenne_[2] = 1;
    for (std::size_t i = 2; i < size; ++i) {
        fib_[i] = fib_[i - 1] + fib_[i - 2];
        lucas_[i] = lucas_[i - 1] + lucas_[i - 2];
        if (i >= 3) mersenne_[i] = mersenne_[i - 1] + mersenne_[i - 2] + 1 - minus_one_pow(static_cast<int>(i));
    }
}

IntPolynomial fibonacci_poly(int n) {
    require(n >= 0, "fibonacci_poly: negative index");
    IntPolynomial prev{}, cur = IntPolynomial::constant(1);
    if (n == 0) return prev;
    const IntPolynomial x = IntPolynomial::variable();
    for (int i = 1; i < n; ++i) {
        IntPolynomial next = x * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPolynomial lucas_poly(int n) {
    require(n >= 1, "lucas_poly: index below 1");
    return fibonacci_poly(n + 1) + fibonacci_poly(n - 1);
}

// ---------------------------------------------------------------------------

std::string to_string(FamilyId id) {
    switch (id) {
        case FamilyId::F: return "F";
        case FamilyId::W: return "W";
        case FamilyId::Fp: return "Fp";
        case FamilyId::F1: return "F1";
        case FamilyId::Fp1: return "Fp1";
        case FamilyId::Fpn: return "Fpn";
        case FamilyId::W1: return "W1";
    }
    throw std::invalid_argument("unknown family id");
}

FamilyId parse_family(std::string_view name) {
    for (FamilyId id : kAllFamilies)
        if (to_string(id) == name) return id;
    throw ParseError("unknown family '" + std::string(name) + "' (expected F, W, Fp, F1, Fp1, Fpn or W1)");
}

int family_min_n(FamilyId id) {
    switch (id) {
        case FamilyId::F: return 0;
        case FamilyId::F1: return 1;
        case FamilyId::Fp:
        case FamilyId::Fp1: return 2;
        case FamilyId::W:
        case FamilyId::Fpn:
        case FamilyId::W1: return 3;
    }
    throw std::invalid_argument("unknown family id");
}

namespace {

void require_range(FamilyId id, int n) {
    require(n >= family_min_n(id),
            to_string(id) + "_n is defined for n >= " + std::to_string(family_min_n(id)) + ", got " +
                std::to_string(n));
}

/// 1, then the pairs (i, i-1) for i = 2..n, then n.
std::vector<int> path_tokens(int n) {
    std::vector<int> t;
    if (n == 0) return t;
    t.push_back(1);
    for (int i = 2; i <= n; ++i) {
        t.push_back(i);
        t.push_back(i - 1);
    }
    t.push_back(n);
    return t;
}

/// 1, n, then the pairs (i, i-1) for i = 2..n.
std::vector<int> cycle_tokens(int n) {
    std::vector<int> t{1, n};
    for (int i = 2; i <= n; ++i) {
        t.push_back(i);
        t.push_back(i - 1);
    }
    return t;
}

/// 1, 2, 3, 2, 1, then the pairs (i, i-1) for i = 4..n, then n.
std::vector<int> nested_tokens(int n) {
    if (n == 2) return {1, 2, 2, 1};
    std::vector<int> t{1, 2, 3, 2, 1};
    for (int i = 4; i <= n; ++i) {
        t.push_back(i);
        t.push_back(i - 1);
    }
    t.push_back(n);
    return t;
}

}  // namespace

std::vector<int> family_tokens(FamilyId id, int n) {
    require_range(id, n);
    std::vector<int> t;
    switch (id) {
        case FamilyId::F:
        case FamilyId::F1: t = path_tokens(n); break;
        case FamilyId::W:
        case FamilyId::W1: t = cycle_tokens(n); break;
        case FamilyId::Fp:
        case FamilyId::Fp1:
        case FamilyId::Fpn: t = nested_tokens(n); break;
    }
    if (id == FamilyId::F1 || id == FamilyId::Fp1 || id == FamilyId::W1) t.front() = -t.front();
    if (id == FamilyId::Fpn) t.back() = -t.back();
    return t;
}

Bouquet make_family(FamilyId id, int n) { return bouquet_from_tokens(family_tokens(id, n)); }

BigInt predicted_kappa(FamilyId id, int n) {
    require_range(id, n);
    switch (id) {
        case FamilyId::F: return fibonacci(n + 1);
        case FamilyId::W: return associated_mersenne(n);
        case FamilyId::Fp: return lucas(n - 1);
        case FamilyId::F1: return fibonacci(n + 2);
        case FamilyId::W1: return 2 * fibonacci(n + 1) - 1 + minus_one_pow(n + 1);
        case FamilyId::Fp1: return fibonacci(n) + lucas(n - 1);
        case FamilyId::Fpn: return lucas(n);
    }
    throw std::invalid_argument("unknown family id");
}

namespace {

/// k_n = k_{n-1} + k_{n-2} started from k_{first} = a, k_{first+1} = b.
BigInt two_term(int first, BigInt a, BigInt b, int n) {
    if (n == first) return a;
    for (int i = first + 2; i <= n; ++i) {
        BigInt next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return b;
}

}  // namespace

BigInt delcon_kappa(FamilyId id, int n) {
    require_range(id, n);
    switch (id) {
        case FamilyId::F: return two_term(0, 1, 1, n);
        case FamilyId::Fp: return two_term(2, 1, 3, n);
        case FamilyId::F1: return two_term(1, 2, 3, n);
        case FamilyId::Fp1: return two_term(2, 2, 5, n);
        case FamilyId::W: {
            BigInt prev = 1, cur = 1;
            for (int i = 3; i <= n; ++i) {
                BigInt next = cur + prev + 1 - minus_one_pow(i);
                prev = std::move(cur);
                cur = std::move(next);
            }
            return cur;
        }
        case FamilyId::Fpn: {
            BigInt k = 4;
            for (int i = 4; i <= n; ++i) k += delcon_kappa(FamilyId::Fp, i - 1);
            return k;
        }
        case FamilyId::W1: {
            BigInt k = (n % 2 == 1) ? BigInt(6) : BigInt(8);
            for (int i = (n % 2 == 1) ? 5 : 6; i <= n; i += 2) k += 2 * fibonacci(i);
            return k;
        }
    }
    throw std::invalid_argument("unknown family id");
}

bool has_predicted_charpoly(FamilyId id) { return id != FamilyId::W; }

IntPolynomial predicted_charpoly(FamilyId id, int n) {
    if (!has_predicted_charpoly(id))
        throw std::invalid_argument("no closed-form characteristic polynomial for " + to_string(id));
    require_range(id, n);
    const IntPolynomial t = IntPolynomial::variable();
    switch (id) {
        case FamilyId::F: return fibonacci_poly(n + 1);
        case FamilyId::Fp: return t * lucas_poly(n - 1);
        case FamilyId::Fp1: return t * lucas_poly(n - 1) - fibonacci_poly(n);
        case FamilyId::F1: return fibonacci_poly(n + 1) - fibonacci_poly(n);
        case FamilyId::W1:
            return (t - IntPolynomial::constant(1)) * fibonacci_poly(n) + BigInt(2) * fibonacci_poly(n - 1) +
                   IntPolynomial::constant(minus_one_pow(n + 1) - 1);
        case FamilyId::Fpn: return t * (lucas_poly(n - 1) - lucas_poly(n - 2));
        case FamilyId::W: break;
    }
    throw std::invalid_argument("unknown family id");
}

}  // namespace qtree
