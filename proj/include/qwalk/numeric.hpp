#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace qwalk {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline double to_double(const BigInt& z) { return z.convert_to<double>(); }

inline bool is_integer(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Parse "3", "-4/7" or a plain decimal like "0.25" into an exact rational.
inline std::optional<Rational> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            BigInt num(s.substr(0, slash));
            BigInt den(s.substr(slash + 1));
            if (den == 0) return std::nullopt;
            return Rational(num, den);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) {
            return Rational(BigInt(s));
        }
        std::string head = s.substr(0, dot);
        std::string tail = s.substr(dot + 1);
        if (tail.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
        bool neg = !head.empty() && head[0] == '-';
        if (head == "-" || head.empty()) head = neg ? "-0" : "0";
        BigInt scale = 1;
        for (size_t i = 0; i < tail.size(); ++i) scale *= 10;
        BigInt num = BigInt(head) * scale;
        BigInt frac(tail.empty() ? "0" : tail);
        num += neg ? -frac : frac;
        return Rational(num, scale);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

inline long long to_long_checked(const BigInt& z, const char* what = "value") {
    if (z > BigInt(std::numeric_limits<long long>::max()) ||
        z < BigInt(std::numeric_limits<long long>::min())) {
        throw std::overflow_error(std::string(what) + " exceeds 64-bit range");
    }
    return static_cast<long long>(z);
}

inline long long gcd_ll(long long a, long long b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

/// Trial-division square-free test; only used for small discriminants.
inline bool is_square_free(long long n) {
    if (n < 1) return false;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
    }
    return true;
}

inline bool is_odd_prime(long long n) {
    if (n < 3 || n % 2 == 0) return false;
    for (long long p = 3; p * p <= n; p += 2) {
        if (n % p == 0) return false;
    }
    return true;
}

/// n = 2^k * m with m odd; returns {k, m}.
inline std::pair<int, long long> split_power_of_two(long long n) {
    int k = 0;
    while (n > 0 && n % 2 == 0) {
        n /= 2;
        ++k;
    }
    return {k, n};
}

}  // namespace qwalk
