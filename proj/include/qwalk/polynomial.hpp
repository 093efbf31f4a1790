#pragma once

#include "qwalk/numeric.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace qwalk {

// Dense integer polynomials, coefficients in ascending degree order.
// The zero polynomial is the empty vector; otherwise the leading
// coefficient is nonzero.
using Poly = std::vector<BigInt>;

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline bool poly_is_zero(const Poly& p) { return p.empty(); }

inline Poly poly_from(std::initializer_list<long long> coeffs) {
    Poly p;
    for (long long c : coeffs) p.emplace_back(c);
    poly_trim(p);
    return p;
}

inline BigInt poly_eval(const Poly& p, const BigInt& x) {
    BigInt acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline double poly_eval(const Poly& p, double x) {
    double acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

inline Poly poly_derivative(const Poly& p) {
    if (p.size() <= 1) return {};
    Poly d(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * BigInt(static_cast<long long>(i));
    poly_trim(d);
    return d;
}

/// Exact division; returns quotient only when divisor * quotient == dividend.
inline std::optional<Poly> poly_divide_exact(const Poly& dividend, const Poly& divisor) {
    if (divisor.empty()) throw std::invalid_argument("division by zero polynomial");
    if (dividend.empty()) return Poly{};
    if (dividend.size() < divisor.size()) return std::nullopt;
    Poly rem = dividend;
    Poly quot(dividend.size() - divisor.size() + 1, BigInt(0));
    const BigInt& lead = divisor.back();
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        BigInt top = rem[k + divisor.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0) return std::nullopt;
        BigInt q = top / lead;
        quot[k] = q;
        for (size_t i = 0; i < divisor.size(); ++i) rem[k + i] -= q * divisor[i];
    }
    poly_trim(rem);
    if (!rem.empty()) return std::nullopt;
    poly_trim(quot);
    return quot;
}

inline bool poly_divides(const Poly& divisor, const Poly& dividend) {
    return poly_divide_exact(dividend, divisor).has_value();
}

inline BigInt poly_content(const Poly& p) {
    BigInt g = 0;
    for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
    return g;
}

inline Poly poly_primitive_part(Poly p) {
    poly_trim(p);
    if (p.empty()) return p;
    BigInt g = poly_content(p);
    if (p.back() < 0) g = -g;
    for (auto& c : p) c /= g;
    return p;
}

/// Pseudo-remainder of a by b (lead(b)^(deg a - deg b + 1) * a mod b).
inline Poly poly_pseudo_rem(Poly a, const Poly& b) {
    poly_trim(a);
    if (b.empty()) throw std::invalid_argument("pseudo-remainder by zero");
    const BigInt& lb = b.back();
    int db = poly_degree(b);
    while (!a.empty() && poly_degree(a) >= db) {
        int shift = poly_degree(a) - db;
        BigInt la = a.back();
        for (auto& c : a) c *= lb;
        for (int i = 0; i <= db; ++i) a[shift + i] -= la * b[i];
        poly_trim(a);
    }
    return a;
}

/// Primitive-PRS gcd over the integers, result primitive with positive lead.
inline Poly poly_gcd(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    if (a.empty()) return poly_primitive_part(b);
    if (b.empty()) return poly_primitive_part(a);
    a = poly_primitive_part(a);
    b = poly_primitive_part(b);
    while (!b.empty()) {
        Poly r = poly_pseudo_rem(a, b);
        a = std::move(b);
        b = poly_primitive_part(r);
    }
    return a;
}

/// Degree of the square-free part, i.e. the number of distinct complex roots.
inline int poly_distinct_root_count(const Poly& p) {
    if (p.empty()) return 0;
    Poly g = poly_gcd(p, poly_derivative(p));
    return poly_degree(p) - poly_degree(g);
}

/// Synthetic division by (x - r); succeeds only when r is an exact root.
inline std::optional<Poly> poly_deflate_root(const Poly& p, const BigInt& r) {
    if (p.empty()) return std::nullopt;
    if (poly_eval(p, r) != 0) return std::nullopt;
    Poly q(p.size() - 1);
    BigInt carry = 0;
    for (int i = static_cast<int>(p.size()) - 1; i >= 1; --i) {
        carry = carry * r + p[i];
        q[i - 1] = carry;
    }
    return q;
}

}  // namespace qwalk
