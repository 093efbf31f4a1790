#include "qwalk/families.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/io.hpp"
#include "qwalk/spectral.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>

using namespace qwalk;

namespace {

std::vector<double> sorted_spectrum(const Graph& g) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g.adjacency());
    std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + g.vertex_count());
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("graph basics and invariants") {
    Graph g(4);
    g.add_edge(0, 1);
    g.set_weight(1, 2, Rational(3, 2));
    CHECK(g.weight(0, 1) == 1.0);
    CHECK(g.weight(1, 0) == 1.0);
    CHECK(g.weight(1, 2) == doctest::Approx(1.5));
    CHECK(g.weight(0, 0) == 0.0);
    CHECK_FALSE(g.integer_weighted());
    CHECK(g.all_exact());
    CHECK_THROWS_AS(g.set_weight(2, 2, Rational(1)), std::invalid_argument);

    Graph loops(2, true);
    loops.set_weight(0, 0, Rational(2));
    CHECK(loops.weight(0, 0) == 2.0);

    // adjacency is exactly symmetric for every generated family
    for (const Graph& fam : {path_graph(9), cycle_graph(8), complete_graph(6), star_graph(5), book_graph(3)}) {
        Eigen::MatrixXd a = fam.adjacency();
        CHECK((a - a.transpose()).cwiseAbs().maxCoeff() == 0.0);
        CHECK(fam.integer_weighted());
    }
}

TEST_CASE("path and cycle spectra match the closed forms") {
    const double pi = std::acos(-1.0);
    for (int n = 2; n <= 64; ++n) {
        Graph p = path_graph(n);
        auto spec = sorted_spectrum(p);
        std::vector<double> expected;
        for (int j = 1; j <= n; ++j) expected.push_back(2 * std::cos(j * pi / (n + 1)));
        std::sort(expected.begin(), expected.end());
        for (int i = 0; i < n; ++i) CHECK(std::abs(spec[i] - expected[i]) < 1e-10);
    }
    for (int n = 3; n <= 64; ++n) {
        Graph c = cycle_graph(n);
        auto spec = sorted_spectrum(c);
        std::vector<double> expected;
        for (int j = 0; j < n; ++j) expected.push_back(2 * std::cos(2 * j * pi / n));
        std::sort(expected.begin(), expected.end());
        for (int i = 0; i < n; ++i) CHECK(std::abs(spec[i] - expected[i]) < 1e-10);
    }
}

TEST_CASE("cartesian product") {
    SUBCASE("K2 x K2 is C4") {
        Graph q2 = cartesian_product(complete_graph(2), complete_graph(2));
        CHECK(q2.vertex_count() == 4);
        CHECK(q2.edge_count() == 4);
        auto spec = sorted_spectrum(q2);
        CHECK(spec[0] == doctest::Approx(-2));
        CHECK(spec[1] == doctest::Approx(0));
        CHECK(spec[2] == doctest::Approx(0));
        CHECK(spec[3] == doctest::Approx(2));
    }

    SUBCASE("Star(3) x P2 is the book graph B3 on 8 vertices") {
        Graph b = cartesian_product(star_graph(3), path_graph(2));
        CHECK(b.vertex_count() == 8);
        Graph book = book_graph(3);
        CHECK(book.vertex_count() == 8);
        CHECK(b.edge_count() == book.edge_count());
        auto s1 = sorted_spectrum(b);
        auto s2 = sorted_spectrum(book);
        for (size_t i = 0; i < s1.size(); ++i) CHECK(s1[i] == doctest::Approx(s2[i]));
    }

    SUBCASE("P3 x P3 grid degree sequence") {
        Graph grid = cartesian_product(path_graph(3), path_graph(3));
        std::multiset<int> degs;
        for (int v = 0; v < 9; ++v) degs.insert(static_cast<int>(grid.degree(v)));
        CHECK(degs == std::multiset<int>({2, 2, 2, 2, 3, 3, 3, 3, 4}));
    }

    SUBCASE("product spectrum is all pairwise sums") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 4; ++trial) {
            const int na = 3 + static_cast<int>(rng() % 8);
            const int nb = 3 + static_cast<int>(rng() % 8);
            Graph a(na), b(nb);
            for (int u = 0; u < na; ++u)
                for (int v = u + 1; v < na; ++v)
                    if (rng() % 2) a.add_edge(u, v);
            for (int u = 0; u < nb; ++u)
                for (int v = u + 1; v < nb; ++v)
                    if (rng() % 2) b.add_edge(u, v);
            Graph p = cartesian_product(a, b);
            REQUIRE(p.vertex_count() <= 100);
            auto sa = sorted_spectrum(a);
            auto sb = sorted_spectrum(b);
            std::vector<double> sums;
            for (double x : sa)
                for (double y : sb) sums.push_back(x + y);
            std::sort(sums.begin(), sums.end());
            auto sp = sorted_spectrum(p);
            for (size_t i = 0; i < sp.size(); ++i) CHECK(std::abs(sp[i] - sums[i]) < 1e-9);
        }
    }
}

TEST_CASE("join and corona") {
    SUBCASE("K1 + C4 is the wheel W4") {
        Graph w = join(complete_graph(1), cycle_graph(4));
        CHECK(w.vertex_count() == 5);
        CHECK(w.edge_count() == 8);
        CHECK(w.degree(0) == 4);
    }

    SUBCASE("P2 + P2 is K4") {
        Graph k = join(path_graph(2), path_graph(2));
        CHECK(k.vertex_count() == 4);
        CHECK(k.edge_count() == 6);
    }

    SUBCASE("K1 + (Kn u Kn) builds the double-cone") {
        const int n = 3;
        Graph side = disjoint_union(complete_graph(n), complete_graph(n));
        Graph g = join(complete_graph(1), side);
        CHECK(g.vertex_count() == 2 * n + 1);
        CHECK(g.degree(0) == 2 * n);
        for (int v = 1; v <= 2 * n; ++v) CHECK(g.degree(v) == n);
    }

    SUBCASE("corona edge counts") {
        Graph fan = corona(complete_graph(1), path_graph(4));
        CHECK(fan.vertex_count() == 5);
        CHECK(fan.edge_count() == 7);

        Graph sun = corona(cycle_graph(3), complete_graph(1));
        CHECK(sun.vertex_count() == 6);
        CHECK(sun.edge_count() == 6);

        CHECK(corona(complete_graph(1), complete_graph(1)).edge_count() == 1);
    }
}

TEST_CASE("cayley graph over an abelian group") {
    // 32-vertex example: Z_8 x Z_4 with S = {(0,+-1),(+-1,0),(+-1,2),(+-2,0)}
    std::vector<GroupElem> s = {{0, 1}, {0, 3}, {1, 0}, {7, 0}, {1, 2}, {7, 2}, {2, 0}, {6, 0}};
    Graph g = cayley_abelian({8, 4}, s);
    CHECK(g.vertex_count() == 32);
    for (int v = 0; v < 32; ++v) CHECK(g.degree(v) == 8);

    // brute-force adjacency oracle: a ~ b iff a - b in S
    std::set<std::pair<long long, long long>> sset;
    for (const auto& e : s) sset.insert({e[0], e[1]});
    for (int i = 0; i < 32; ++i) {
        for (int j = 0; j < 32; ++j) {
            if (i == j) continue;
            long long a0 = i / 4, a1 = i % 4, b0 = j / 4, b1 = j % 4;
            bool adj = sset.count({((a0 - b0) % 8 + 8) % 8, ((a1 - b1) % 4 + 4) % 4}) > 0;
            CHECK(g.has_edge(i, j) == adj);
        }
    }

    CHECK_THROWS_AS(cayley_abelian({5}, {{1}}), std::invalid_argument);      // not closed under negation
    CHECK_THROWS_AS(cayley_abelian({4}, {{0}}), std::invalid_argument);      // identity in S
    CHECK(cycle_graph(5).family.odd_abelian_cayley());
    CHECK_FALSE(cycle_graph(6).family.odd_abelian_cayley());
}

TEST_CASE("complete graph minus disjoint 4-cycles") {
    Graph g = complete_minus_c4s(6, {{0, 1, 2, 3}});
    CHECK(g.edge_count() == 15 - 4);
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK_FALSE(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(2, 3));
    CHECK_FALSE(g.has_edge(0, 3));
    CHECK(g.has_edge(0, 2));  // diagonals stay
    CHECK(g.has_edge(1, 3));
    CHECK_THROWS_AS(complete_minus_c4s(8, {{0, 1, 2, 3}, {3, 4, 5, 6}}), std::invalid_argument);
}

TEST_CASE("attach_branches wiring and switching automorphism") {
    SUBCASE("P2 branches on a single host vertex give P5") {
        Graph host = complete_graph(1);
        Graph x1 = path_graph(2);
        // attach x1 vertex 1 (path label 2) to the host vertex
        auto built = attach_branches(host, x1, {{1, 0, Rational(1)}});
        const Graph& g = built.graph;
        CHECK(g.vertex_count() == 5);
        CHECK(g.edge_count() == 4);
        CHECK_FALSE(built.disconnected_host);
        // path shape: degrees 1,2,2,2,1 in some order
        std::multiset<int> degs;
        for (int v = 0; v < 5; ++v) degs.insert(static_cast<int>(g.degree(v)));
        CHECK(degs == std::multiset<int>({1, 1, 2, 2, 2}));
        auto perm = built.branches.switching_permutation(5);
        CHECK(is_automorphism(g, perm));
    }

    SUBCASE("C6 branch attached by one vertex") {
        auto built = attach_branches(complete_graph(1), cycle_graph(6), {{0, 0, Rational(1)}});
        CHECK(built.graph.vertex_count() == 13);
        CHECK(is_automorphism(built.graph, built.branches.switching_permutation(13)));
    }

    SUBCASE("empty host is flagged, not rejected") {
        auto built = attach_branches(Graph(0), path_graph(2), {});
        CHECK(built.disconnected_host);
        CHECK(built.graph.vertex_count() == 4);
    }

    SUBCASE("random weighted constructions keep the switching automorphism exact") {
        std::mt19937 rng(99);
        for (int trial = 0; trial < 25; ++trial) {
            const int nh = 1 + static_cast<int>(rng() % 6);
            const int nx = 1 + static_cast<int>(rng() % 4);
            Graph host(nh), x1(nx);
            for (int u = 0; u < nh; ++u)
                for (int v = u + 1; v < nh; ++v)
                    if (rng() % 2) host.add_edge(u, v, 1 + static_cast<long long>(rng() % 3));
            for (int u = 0; u < nx; ++u)
                for (int v = u + 1; v < nx; ++v)
                    if (rng() % 2) x1.add_edge(u, v, 1 + static_cast<long long>(rng() % 3));
            std::vector<Attachment> att;
            for (int a = 0; a < nx; ++a)
                for (int y = 0; y < nh; ++y)
                    if (rng() % 3 == 0) att.push_back({a, y, Rational(1 + static_cast<long long>(rng() % 3))});
            auto built = attach_branches(host, x1, att);
            CHECK(is_automorphism(built.graph, built.branches.switching_permutation(built.graph.vertex_count())));
        }
    }
}

TEST_CASE("graph json round trip and validation") {
    SUBCASE("edge list without weights") {
        Json j = {{"n", 3}, {"edges", {{0, 1}, {1, 2}}}};
        Graph g = graph_from_json(j);
        CHECK(g.vertex_count() == 3);
        CHECK(g.weight(0, 1) == 1.0);
        CHECK(g.weight(0, 2) == 0.0);
        CHECK(g.integer_weighted());
    }

    SUBCASE("round trip is the identity on canonical files") {
        Graph g = book_graph(3);
        Json j = graph_to_json(g);
        Graph h = graph_from_json(j);
        CHECK(graph_to_json(h) == j);
    }

    SUBCASE("rational weight strings survive a round trip exactly") {
        Graph g(3);
        g.set_weight(0, 1, Rational(3, 2));
        g.set_weight(1, 2, Rational(7));
        Json j = graph_to_json(g);
        Graph h = graph_from_json(j);
        CHECK(*h.exact_weight(0, 1) == Rational(3, 2));
        CHECK(*h.exact_weight(1, 2) == Rational(7));
    }

    SUBCASE("asymmetric duplicate weights are rejected") {
        Json j = {{"n", 2}, {"edges", {{0, 1, 2}, {1, 0, 3}}}};
        CHECK_THROWS_AS(graph_from_json(j), std::invalid_argument);
        Json ok = {{"n", 2}, {"edges", {{0, 1, 2}, {1, 0, 2}}}};
        CHECK(graph_from_json(ok).weight(0, 1) == 2.0);
    }

    SUBCASE("self-loop without flag is rejected") {
        Json j = {{"n", 2}, {"edges", {{0, 0}}}};
        CHECK_THROWS_AS(graph_from_json(j), std::invalid_argument);
        Json ok = {{"n", 2}, {"edges", {{0, 0}}}, {"loops", true}};
        CHECK(graph_from_json(ok).weight(0, 0) == 1.0);
    }

    SUBCASE("file round trip") {
        Graph g = cycle_graph(5);
        const char* path = "roundtrip_tmp.json";
        write_graph(g, path);
        Graph h = read_graph(path);
        CHECK(h.vertex_count() == 5);
        CHECK(h.family.kind == FamilyInfo::Kind::Cycle);
        CHECK(graph_to_json(h) == graph_to_json(g));
        std::remove(path);
    }
}

TEST_CASE("branch pair json") {
    BranchPair bp;
    bp.copy1 = {1, 2};
    bp.copy2 = {4, 3};
    Json j = branch_pair_to_json(bp);
    BranchPair back = branch_pair_from_json(j);
    CHECK(back.copy1 == bp.copy1);
    CHECK(back.copy2 == bp.copy2);
    CHECK(back.map(1) == 4);
    CHECK(back.inverse_map(3) == 2);

    Json f_only = {{"f", {{1, 4}, {2, 3}}}};
    BranchPair bf = branch_pair_from_json(f_only);
    CHECK(bf.copy1 == std::vector<int>({1, 2}));

    Json bad = {{"copy1", {1}}, {"copy2", {2, 3}}};
    CHECK_THROWS_AS(branch_pair_from_json(bad), std::invalid_argument);
}
