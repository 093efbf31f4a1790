#pragma once

#include "qwalk/numeric.hpp"
#include "qwalk/sweeps.hpp"

#include <string>

namespace qwalk {

/// Three-valued family-predicate result: the characterizations below are
/// parameter checks of published transfer families, so a miss is a firm No
/// only when the statement is an iff at that level.
struct PredicateResult {
    enum class Value { Yes, No, Flagged };
    Value value = Value::No;
    std::string note;

    bool yes() const { return value == Value::Yes; }
};

/// Vertex PGST exists somewhere on P_n iff n+1 = 2^k or n+1 = 2^k * p with p
/// an odd prime.
inline bool path_pgst_any(long long n) {
    if (n < 2) return false;
    auto [k, m] = split_power_of_two(n + 1);
    (void)k;
    return m == 1 || is_odd_prime(m);
}

/// Vertex PGST on P_n between a and b (1-indexed): a + b = n + 1 and either
/// n+1 = 2^k, or n+1 = 2^k * p with a a multiple of 2^(k-1). For k <= 1 the
/// multiplicity condition is vacuous.
inline bool path_vertex_pgst(long long n, long long a, long long b) {
    if (a < 1 || b < 1 || a > n || b > n || a == b) return false;
    if (a + b != n + 1) return false;
    auto [k, m] = split_power_of_two(n + 1);
    if (m == 1) return true;
    if (!is_odd_prime(m)) return false;
    if (k <= 1) return true;
    const long long step = 1LL << (k - 1);
    return a % step == 0;
}

/// Cycle C_n admits vertex PGST iff n = 2^k with k >= 2 (between antipodal
/// vertices).
inline bool cycle_vertex_pgst_any(long long n) {
    auto [k, m] = split_power_of_two(n);
    return m == 1 && k >= 2;
}

/// Cycle C_n admits pair-PGST iff n = 2^k or n = 2^k * p, k >= 1, p an odd
/// prime.
inline bool cycle_pair_pgst_any(long long n) {
    if (n < 3 || n % 2 != 0) return false;
    auto [k, m] = split_power_of_two(n);
    (void)k;
    return m == 1 || is_odd_prime(m);
}

/// Pair-PGST on P_n between (a, n+1-a) and ((n+1)/2 - a, (n+1)/2 + a) for
/// a < (n+1)/2, a != (n+1)/4, when n+1 = 2^k (k > 2) or n+1 = 2^k * p with a
/// a multiple of 2^(k-2). The k = 1 branch of the multiple condition is
/// ill-defined, so such inputs come back Flagged rather than decided.
inline PredicateResult path_pair_pgst(long long n, VertexPair p1, VertexPair p2) {
    PredicateResult out;
    if (n < 3 || (n + 1) % 2 != 0) {
        out.note = "template needs odd n";
        return out;
    }
    const long long half = (n + 1) / 2;
    auto is_template = [&](VertexPair s, VertexPair t) {
        // s = {a, n+1-a}, t = {half - a, half + a} in some order
        long long a = std::min(s.a, s.b) + 1, b = std::max(s.a, s.b) + 1;  // 1-indexed
        if (a + b != n + 1) return std::make_pair(false, 0LL);
        long long c = std::min(t.a, t.b) + 1, d = std::max(t.a, t.b) + 1;
        if (c != half - a || d != half + a) return std::make_pair(false, 0LL);
        return std::make_pair(true, a);
    };
    auto [match1, a1] = is_template(p1, p2);
    auto [match2, a2] = is_template(p2, p1);
    if (!match1 && !match2) {
        out.note = "pairs do not match the (a, n+1-a) / ((n+1)/2 -+ a) template";
        return out;
    }
    const long long a = match1 ? a1 : a2;
    if (a >= half || 4 * a == n + 1) {
        out.note = "parameter a out of range or a = (n+1)/4";
        return out;
    }
    auto [k, m] = split_power_of_two(n + 1);
    if (m == 1 && k > 2) {
        out.value = PredicateResult::Value::Yes;
        out.note = "n+1 = 2^" + std::to_string(k);
        return out;
    }
    if (is_odd_prime(m)) {
        if (k == 1) {
            out.value = PredicateResult::Value::Flagged;
            out.note = "n+1 = 2p: the multiple-of-2^(k-2) condition is undefined for k = 1";
            return out;
        }
        if (k >= 2 && a % (1LL << (k - 2)) == 0) {
            out.value = PredicateResult::Value::Yes;
            out.note = "n+1 = 2^" + std::to_string(k) + " * " + std::to_string(m) +
                       ", a multiple of 2^" + std::to_string(k - 2);
            return out;
        }
    }
    out.note = "parameters outside the characterized family";
    return out;
}

/// Pair-PGST on C_n between (a, n-a) and (n/2 - a, n/2 + a), or the
/// antipodal-shift form (a, b) -> (a + n/2, b + n/2) for n = 2^k (k >= 2)
/// with a - b != n/2. Matching is up to rotation and reflection.
inline PredicateResult cycle_pair_pgst(long long n, VertexPair p1, VertexPair p2) {
    PredicateResult out;
    if (n < 4 || n % 2 != 0) {
        out.note = "even n required";
        return out;
    }
    auto [k, m] = split_power_of_two(n);
    const long long half = n / 2;
    auto norm = [n](long long v) { return ((v % n) + n) % n; };

    // antipodal-shift family on binary cycles
    if (m == 1 && k >= 2) {
        for (int swap12 = 0; swap12 < 2; ++swap12) {
            const VertexPair s = swap12 ? p2 : p1;
            const VertexPair t = swap12 ? p1 : p2;
            const bool shifted =
                (norm(t.a - s.a) == half && norm(t.b - s.b) == half) ||
                (norm(t.b - s.a) == half && norm(t.a - s.b) == half);
            if (shifted && norm(s.a - s.b) != half && norm(s.b - s.a) != half) {
                out.value = PredicateResult::Value::Yes;
                out.note = "antipodal shift on C_{2^" + std::to_string(k) + "}";
                return out;
            }
        }
    }

    // reflection family: (a, n-a) -> (n/2 - a, n/2 + a), up to rotation/reflection
    if (m == 1 || is_odd_prime(m)) {
        for (long long rot = 0; rot < n; ++rot) {
            for (int refl = 0; refl < 2; ++refl) {
                auto tf = [&](long long v) { return norm(refl ? rot - v : v - rot); };
                for (int swap12 = 0; swap12 < 2; ++swap12) {
                    const VertexPair s = swap12 ? p2 : p1;
                    const VertexPair t = swap12 ? p1 : p2;
                    long long sa = tf(s.a), sb = tf(s.b);
                    if (norm(sa + sb) != 0) continue;  // need {a, n-a}
                    long long a = std::min(norm(sa), norm(sb));
                    if (a == 0 || a >= half || 4 * a == n) continue;
                    long long ta = tf(t.a), tb = tf(t.b);
                    if (!((ta == norm(half - a) && tb == norm(half + a)) ||
                          (tb == norm(half - a) && ta == norm(half + a))))
                        continue;
                    if (m == 1 && k > 2) {
                        out.value = PredicateResult::Value::Yes;
                        out.note = "n = 2^" + std::to_string(k);
                        return out;
                    }
                    if (is_odd_prime(m)) {
                        if (k == 1) {
                            out.value = PredicateResult::Value::Flagged;
                            out.note = "n = 2p: the 2^(k-2)-multiple condition is undefined for k = 1";
                            return out;
                        }
                        if (a % (1LL << (k - 2)) == 0) {
                            out.value = PredicateResult::Value::Yes;
                            out.note = "n = 2^" + std::to_string(k) + " * " + std::to_string(m) +
                                       ", a = " + std::to_string(a) + " a multiple of 2^" +
                                       std::to_string(k - 2);
                            return out;
                        }
                    }
                }
            }
        }
    }
    out.note = "parameters outside the characterized families";
    return out;
}

}  // namespace qwalk
