#pragma once

#include "qwalk/polynomial.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace qwalk {

/// Exact algebraic form of an eigenvalue of an integer-weighted graph:
/// an integer, a quadratic integer (c + d*sqrt(delta))/2 with delta > 1
/// square-free and d != 0, or something of higher degree.
struct AlgebraicClass {
    enum class Tag { Integer, Quadratic, Other };
    Tag tag = Tag::Other;
    BigInt int_value;                      // Integer
    long long c = 0, d = 0, delta = 0;     // Quadratic
    int min_poly_degree = 0;               // Other; 0 = unknown

    double numeric() const {
        if (tag == Tag::Integer) return to_double(int_value);
        if (tag == Tag::Quadratic)
            return (static_cast<double>(c) + static_cast<double>(d) * std::sqrt(static_cast<double>(delta))) / 2.0;
        return std::nan("");
    }

    std::string describe() const {
        switch (tag) {
            case Tag::Integer: return int_value.str();
            case Tag::Quadratic:
                return "(" + std::to_string(c) + (d < 0 ? "" : "+") + std::to_string(d) +
                       "*sqrt(" + std::to_string(delta) + "))/2";
            default:
                return min_poly_degree > 0 ? "algebraic(degree " + std::to_string(min_poly_degree) + ")"
                                           : "algebraic(degree unknown)";
        }
    }
};

/// Minimal quadratic x^2 - c x + (c^2 - d^2 delta)/4 of (c + d sqrt(delta))/2.
/// Integer coefficients require c^2 = d^2 delta (mod 4).
inline std::optional<Poly> quadratic_min_poly(long long c, long long d, long long delta) {
    BigInt disc = BigInt(c) * c - BigInt(d) * d * delta;
    if (disc % 4 != 0) return std::nullopt;
    Poly m(3);
    m[2] = 1;
    m[1] = -c;
    m[0] = disc / 4;
    return m;
}

/// Classify each numeric root of the exact polynomial. Integer roots are
/// recognized by rounding and exact evaluation; quadratic roots by a finite
/// scan over square-free discriminants (bounded by the spectral radius) with
/// exact divisibility as the final word. Everything else is Other.
inline std::vector<AlgebraicClass> classify_roots(const Poly& poly,
                                                  const std::vector<double>& roots) {
    std::vector<AlgebraicClass> out(roots.size());
    double max_abs = 1.0;
    for (double r : roots) max_abs = std::max(max_abs, std::abs(r));

    const long long delta_bound = 4 * static_cast<long long>(std::ceil(max_abs * max_abs)) + 1;

    for (size_t i = 0; i < roots.size(); ++i) {
        const double lam = roots[i];
        AlgebraicClass& cls = out[i];

        const double rounded = std::round(lam);
        if (std::abs(lam - rounded) < 1e-6) {
            BigInt k(static_cast<long long>(rounded));
            if (poly_eval(poly, k) == 0) {
                cls.tag = AlgebraicClass::Tag::Integer;
                cls.int_value = k;
                continue;
            }
        }

        bool found = false;
        for (long long delta = 2; delta <= delta_bound && !found; ++delta) {
            if (!is_square_free(delta)) continue;
            const double sq = std::sqrt(static_cast<double>(delta));
            const long long d_bound = static_cast<long long>(std::ceil(2.0 * max_abs / sq)) + 1;
            for (long long d_abs = 1; d_abs <= d_bound && !found; ++d_abs) {
                for (long long d : {d_abs, -d_abs}) {
                    const double c_real = 2.0 * lam - d * sq;
                    const double c_round = std::round(c_real);
                    if (std::abs(c_real - c_round) > 1e-6) continue;
                    const long long c = static_cast<long long>(c_round);
                    auto m = quadratic_min_poly(c, d, delta);
                    if (!m || !poly_divides(*m, poly)) continue;
                    cls.tag = AlgebraicClass::Tag::Quadratic;
                    cls.c = c;
                    cls.d = d;
                    cls.delta = delta;
                    found = true;
                    break;
                }
            }
        }
        if (!found) {
            cls.tag = AlgebraicClass::Tag::Other;
            cls.min_poly_degree = 0;  // not factored further
        }
    }
    return out;
}

}  // namespace qwalk
