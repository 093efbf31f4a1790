#pragma once

#include "qwalk/polynomial.hpp"

#include <vector>

namespace qwalk {

// Square matrix of big integers, row-major.
struct BigIntMatrix {
    int n = 0;
    std::vector<BigInt> a;

    explicit BigIntMatrix(int size) : n(size), a(static_cast<size_t>(size) * size, BigInt(0)) {}
    BigInt& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const BigInt& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

inline BigIntMatrix bigint_mat_mul(const BigIntMatrix& x, const BigIntMatrix& y) {
    BigIntMatrix r(x.n);
    for (int i = 0; i < x.n; ++i) {
        for (int k = 0; k < x.n; ++k) {
            const BigInt& xik = x.at(i, k);
            if (xik == 0) continue;
            for (int j = 0; j < x.n; ++j) {
                if (y.at(k, j) != 0) r.at(i, j) += xik * y.at(k, j);
            }
        }
    }
    return r;
}

/// Characteristic polynomial det(xI - A) of an integer matrix, exact.
/// Faddeev-LeVerrier recurrence; every division is exact in Z.
inline Poly char_poly_faddeev_leverrier(const BigIntMatrix& A) {
    const int n = A.n;
    Poly coeffs(static_cast<size_t>(n) + 1, BigInt(0));
    coeffs[n] = 1;
    if (n == 0) return coeffs;
    BigIntMatrix M(n);
    for (int i = 0; i < n; ++i) M.at(i, i) = 1;
    for (int k = 1; k <= n; ++k) {
        BigIntMatrix AM = bigint_mat_mul(A, M);
        BigInt tr = 0;
        for (int i = 0; i < n; ++i) tr += AM.at(i, i);
        BigInt c = -tr / k;
        coeffs[n - k] = c;
        if (k < n) {
            M = AM;
            for (int i = 0; i < n; ++i) M.at(i, i) += c;
        }
    }
    return coeffs;
}

}  // namespace qwalk
