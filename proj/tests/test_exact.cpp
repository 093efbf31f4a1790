#include "qwalk/algebraic.hpp"
#include "qwalk/charpoly.hpp"
#include "qwalk/families.hpp"
#include "qwalk/polynomial.hpp"
#include "qwalk/spectral.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace qwalk;

TEST_CASE("polynomial arithmetic basics") {
    Poly p = poly_from({-1, 0, 1});  // x^2 - 1
    CHECK(poly_degree(p) == 2);
    CHECK(poly_eval(p, BigInt(3)) == 8);
    CHECK(poly_eval(p, BigInt(1)) == 0);

    Poly q = poly_mul(poly_from({-1, 1}), poly_from({1, 1}));
    CHECK(q == p);

    auto d = poly_derivative(p);
    CHECK(d == poly_from({0, 2}));

    auto quot = poly_divide_exact(p, poly_from({-1, 1}));
    REQUIRE(quot.has_value());
    CHECK(*quot == poly_from({1, 1}));
    CHECK_FALSE(poly_divide_exact(p, poly_from({5, 1})).has_value());
}

TEST_CASE("polynomial gcd and distinct roots") {
    // (x-1)^2 (x+2) has 2 distinct roots.
    Poly p = poly_mul(poly_mul(poly_from({-1, 1}), poly_from({-1, 1})), poly_from({2, 1}));
    CHECK(poly_distinct_root_count(p) == 2);
    Poly g = poly_gcd(p, poly_derivative(p));
    CHECK(poly_degree(g) == 1);

    // Coprime polynomials.
    CHECK(poly_degree(poly_gcd(poly_from({-1, 0, 1}), poly_from({-2, 0, 1}))) == 0);
}

TEST_CASE("deflation by integer roots") {
    Poly p = poly_from({0, -4, 0, 1});  // x^3 - 4x = x(x-2)(x+2)
    auto q = poly_deflate_root(p, BigInt(2));
    REQUIRE(q.has_value());
    CHECK(poly_eval(*q, BigInt(-2)) == 0);
    CHECK(poly_eval(*q, BigInt(0)) == 0);
    CHECK_FALSE(poly_deflate_root(p, BigInt(3)).has_value());
}

TEST_CASE("exact characteristic polynomials of small families") {
    CHECK(char_poly_exact(path_graph(2)) == poly_from({-1, 0, 1}));        // x^2 - 1
    CHECK(char_poly_exact(path_graph(4)) == poly_from({1, 0, -3, 0, 1}));  // x^4 - 3x^2 + 1
    CHECK(char_poly_exact(cycle_graph(4)) == poly_from({0, 0, -4, 0, 1})); // x^4 - 4x^2
    CHECK(char_poly_exact(path_graph(3)) == poly_from({0, -2, 0, 1}));     // x^3 - 2x
}

TEST_CASE("char poly rejects non-integer weights") {
    Graph g(2);
    g.set_weight(0, 1, 0.5);
    CHECK_THROWS_AS(char_poly_exact(g), std::invalid_argument);

    Graph h(2);
    h.set_weight(0, 1, Rational(1, 2));
    CHECK_THROWS_AS(char_poly_exact(h), std::invalid_argument);
}

TEST_CASE("char poly matches a cofactor-expansion determinant oracle on random graphs") {
    // Independent oracle: evaluate det(xI - A) at d+1 integer points by exact
    // fraction-free Gaussian elimination over rationals, then compare values.
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v, 1 + static_cast<long long>(rng() % 3));
        Poly p = char_poly_exact(g);
        for (long long x : {-3LL, -1LL, 0LL, 2LL, 5LL}) {
            // det(xI - A) by exact rational elimination
            std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m[i][j] = (i == j ? Rational(x) : Rational(0)) - *g.exact_weight(i, j);
            Rational det(1);
            bool singular = false;
            for (int col = 0; col < n && !singular; ++col) {
                int pivot = -1;
                for (int row = col; row < n; ++row)
                    if (m[row][col] != 0) { pivot = row; break; }
                if (pivot < 0) { singular = true; break; }
                if (pivot != col) { std::swap(m[pivot], m[col]); det = -det; }
                det *= m[col][col];
                for (int row = col + 1; row < n; ++row) {
                    Rational f = m[row][col] / m[col][col];
                    for (int j = col; j < n; ++j) m[row][j] -= f * m[col][j];
                }
            }
            Rational expected = singular ? Rational(0) : det;
            CHECK(Rational(poly_eval(p, BigInt(x))) == expected);
        }
    }
}

TEST_CASE("eigenvalue classification: integer and quadratic forms") {
    SUBCASE("C4 eigenvalues are all integers") {
        Graph g = cycle_graph(4);
        SpectralData s = analyze(g);
        REQUIRE(s.classified);
        REQUIRE(s.eigenvalues.size() == 3);
        for (const auto& cls : s.classes) CHECK(cls.tag == AlgebraicClass::Tag::Integer);
        CHECK(s.classes[0].int_value == 2);
        CHECK(s.classes[1].int_value == 0);
        CHECK(s.classes[2].int_value == -2);
    }

    SUBCASE("P4 eigenvalues are quadratic with delta=5") {
        Graph g = path_graph(4);
        SpectralData s = analyze(g);
        REQUIRE(s.eigenvalues.size() == 4);
        // (1+sqrt5)/2, (-1+sqrt5)/2, (1-sqrt5)/2, (-1-sqrt5)/2 descending
        const long long cs[] = {1, -1, 1, -1};
        const long long ds[] = {1, 1, -1, -1};
        for (int i = 0; i < 4; ++i) {
            CHECK(s.classes[i].tag == AlgebraicClass::Tag::Quadratic);
            CHECK(s.classes[i].delta == 5);
            CHECK(s.classes[i].c == cs[i]);
            CHECK(s.classes[i].d == ds[i]);
        }
    }

    SUBCASE("P3 eigenvalue sqrt2 is (0 + 2*sqrt2)/2") {
        Graph g = path_graph(3);
        SpectralData s = analyze(g);
        REQUIRE(s.eigenvalues.size() == 3);
        CHECK(s.classes[0].tag == AlgebraicClass::Tag::Quadratic);
        CHECK(s.classes[0].c == 0);
        CHECK(s.classes[0].d == 2);
        CHECK(s.classes[0].delta == 2);
        CHECK(s.classes[1].tag == AlgebraicClass::Tag::Integer);
        CHECK(s.classes[1].int_value == 0);
        CHECK(s.classes[2].tag == AlgebraicClass::Tag::Quadratic);
        CHECK(s.classes[2].d == -2);
    }

    SUBCASE("degree-4 path eigenvalues are Other") {
        Graph g = path_graph(7);  // includes 2cos(pi/8), degree 4
        SpectralData s = analyze(g);
        int other = 0;
        for (const auto& cls : s.classes)
            if (cls.tag == AlgebraicClass::Tag::Other) ++other;
        CHECK(other == 4);  // 2cos(j pi/8), j in {1,3,5,7}
    }
}

TEST_CASE("classification is exact: integer roots vanish, quadratics divide") {
    for (int n : {3, 4, 5, 6, 8, 10}) {
        Graph g = path_graph(n);
        SpectralData s = analyze(g);
        const Poly& p = s.exact_char_poly;
        REQUIRE_FALSE(p.empty());
        for (const auto& cls : s.classes) {
            if (cls.tag == AlgebraicClass::Tag::Integer) {
                CHECK(poly_eval(p, cls.int_value) == 0);
            } else if (cls.tag == AlgebraicClass::Tag::Quadratic) {
                auto m = quadratic_min_poly(cls.c, cls.d, cls.delta);
                REQUIRE(m.has_value());
                CHECK(poly_divides(*m, p));
            }
        }
    }
}

TEST_CASE("C6 eigenvalue grouping with multiplicities") {
    Graph g = cycle_graph(6);
    SpectralData s = analyze(g);
    REQUIRE(s.eigenvalues.size() == 4);
    CHECK(s.eigenvalues[0] == doctest::Approx(2));
    CHECK(s.eigenvalues[1] == doctest::Approx(1));
    CHECK(s.eigenvalues[2] == doctest::Approx(-1));
    CHECK(s.eigenvalues[3] == doctest::Approx(-2));
    CHECK(s.multiplicities == std::vector<int>({1, 2, 2, 1}));
}

TEST_CASE("exact distinct-root count overrides a too-coarse numeric grouping") {
    Graph g = path_graph(3);  // spectrum {sqrt2, 0, -sqrt2}
    DecomposeOptions opt;
    opt.tol = 10.0;  // absurd tolerance merges everything numerically
    SpectralData s = decompose(g, opt);
    REQUIRE(s.eigenvalues.size() == 3);  // exact count wins
    CHECK_FALSE(s.diagnostics.empty());
    CHECK(s.diagnostics.front().find("grouping adjusted") != std::string::npos);
    CHECK(s.eigenvalues[0] == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("decompose rejects non-finite weights and empty graphs") {
    Graph g(2);
    g.set_weight(0, 1, std::nan(""));
    CHECK_THROWS_AS(decompose(g), std::invalid_argument);
    CHECK_THROWS_AS(decompose(Graph(0)), std::invalid_argument);
}

TEST_CASE("numeric eigenvalues agree with exact char poly roots (n <= 32)") {
    for (int n : {5, 12, 21, 32}) {
        Graph g = cycle_graph(n);
        DecomposeOptions opt;
        opt.exact_check_max_n = 32;
        SpectralData s = decompose(g, opt);
        REQUIRE_FALSE(s.exact_char_poly.empty());
        // Newton correction on the square-free part bounds the root distance.
        Poly sf = *poly_divide_exact(s.exact_char_poly,
                                     poly_gcd(s.exact_char_poly, poly_derivative(s.exact_char_poly)));
        Poly dsf = poly_derivative(sf);
        for (double lam : s.eigenvalues) {
            double num = poly_eval(sf, lam);
            double den = poly_eval(dsf, lam);
            REQUIRE(den != 0.0);
            CHECK(std::abs(num / den) < 1e-8);
        }
    }
}
