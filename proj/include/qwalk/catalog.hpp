#pragma once

#include "qwalk/families.hpp"
#include "qwalk/transfer.hpp"

#include <array>

namespace qwalk {

/// A demo construction: a graph together with the isomorphic-branch witness
/// and the twin pairs it certifies.
struct BranchDemo {
    Graph graph;
    BranchPair branches;
    VertexPair source;  // (a, f(a)) as internal ids
    VertexPair target;  // (b, f(b))
};

inline VertexPair make_pair_sorted(int a, int b) {
    return {std::min(a, b), std::max(a, b)};
}

/// 12-vertex graph with certified PPST between one twin pair and pair-PGST
/// evidence (but provably no PPST) between another: two K2 branches hang off
/// the hub pair {2,4}, and two P4 tails do as well.
struct PpstPgstDemo {
    Graph graph;
    BranchPair ppst_branches;   // the two K2 copies
    VertexPair ppst_source, ppst_target;
    BranchPair pgst_branches;   // the two P4 tails
    VertexPair pgst_source, pgst_target;
};

inline PpstPgstDemo demo_ppst_pgst_graph() {
    Graph g(12);
    const std::vector<std::pair<int, int>> edges = {
        {1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 5}, {3, 6}, {6, 4}, {4, 10},
        {10, 11}, {11, 12}, {6, 2}, {2, 7}, {7, 8}, {8, 9}, {2, 5}, {5, 4}};
    for (auto [u, v] : edges) g.add_edge(u - 1, v - 1);
    std::vector<std::string> labels;
    for (int v = 1; v <= 12; ++v) labels.push_back(std::to_string(v));
    g.set_labels(std::move(labels));

    PpstPgstDemo out{std::move(g), {}, {}, {}, {}, {}, {}};
    out.ppst_branches.copy1 = {0, 4};   // labels 1, 5
    out.ppst_branches.copy2 = {2, 5};   // labels 3, 6
    out.ppst_source = make_pair_sorted(0, 2);  // (1,3)
    out.ppst_target = make_pair_sorted(4, 5);  // (5,6)
    out.pgst_branches.copy1 = {1, 6, 7, 8};    // labels 2,7,8,9
    out.pgst_branches.copy2 = {3, 9, 10, 11};  // labels 4,10,11,12
    out.pgst_source = make_pair_sorted(1, 3);  // (2,4)
    out.pgst_target = make_pair_sorted(8, 11); // (9,12)
    return out;
}

/// P6 plus 1-3 extra edges so that two K2 (or P2) copies become isomorphic
/// branches; all variants certify PPST at pi/2.
inline BranchDemo path6_plus_edges(int variant) {
    Graph g = path_graph(6);
    g.family = FamilyInfo{};  // no longer a path
    BranchDemo out{Graph(0), {}, {}, {}};
    switch (variant) {
        case 1:  // close it into a hexagon
            g.add_edge(0, 5);
            out.branches.copy1 = {1, 2};
            out.branches.copy2 = {5, 4};
            break;
        case 2:  // chords {2,4} and {3,5}
            g.add_edge(1, 3);
            g.add_edge(2, 4);
            out.branches.copy1 = {0, 1};
            out.branches.copy2 = {5, 4};
            break;
        case 3:  // chords {1,5}, {2,4}, {4,6}
            g.add_edge(0, 4);
            g.add_edge(1, 3);
            g.add_edge(3, 5);
            out.branches.copy1 = {1, 2};
            out.branches.copy2 = {4, 5};
            break;
        default:
            throw std::invalid_argument("path6_plus_edges: variant must be 1, 2 or 3");
    }
    out.graph = std::move(g);
    out.source = make_pair_sorted(out.branches.copy1[0], out.branches.copy2[0]);
    out.target = make_pair_sorted(out.branches.copy1[1], out.branches.copy2[1]);
    return out;
}

/// C10 plus 2 or 4 extra edges; the added chords make two adjacent-vertex
/// copies isomorphic branches, giving PPST at pi/2.
inline BranchDemo cycle10_plus_edges(int variant) {
    Graph g = cycle_graph(10);
    g.family = FamilyInfo{};
    BranchDemo out{Graph(0), {}, {}, {}};
    switch (variant) {
        case 1:
            g.add_edge(2, 7);
            g.add_edge(3, 8);
            out.branches.copy1 = {4, 3};
            out.branches.copy2 = {6, 7};
            break;
        case 2:
            g.add_edge(2, 8);
            g.add_edge(3, 9);
            g.add_edge(4, 6);
            g.add_edge(5, 7);
            out.branches.copy1 = {4, 3};
            out.branches.copy2 = {7, 8};
            break;
        default:
            throw std::invalid_argument("cycle10_plus_edges: variant must be 1 or 2");
    }
    out.graph = std::move(g);
    out.source = make_pair_sorted(out.branches.copy1[0], out.branches.copy2[0]);
    out.target = make_pair_sorted(out.branches.copy1[1], out.branches.copy2[1]);
    return out;
}

/// 27-vertex network of four hexagons: hexagons 1,2 hang off u, hexagons 3,4
/// off v, and u,v meet through w. Carries perfect transfer of a 12-vertex
/// combination state at t = pi.
struct HexagonNetwork {
    Graph graph;
    // per hexagon h: vertex ids of the labeled corners
    std::array<int, 4> a{}, b{}, c{};
    int u = 0, v = 0, w = 0;
};

inline HexagonNetwork multistate_hexagon_network() {
    HexagonNetwork out;
    Graph g(27);
    std::vector<std::string> labels(27);
    for (int h = 0; h < 4; ++h) {
        const int base = 6 * h;
        for (int i = 0; i < 6; ++i) g.add_edge(base + i, base + (i + 1) % 6);
        out.c[h] = base + 0;
        out.a[h] = base + 2;
        out.b[h] = base + 4;
        const std::string suffix = std::to_string(h + 1);
        labels[base + 0] = "c" + suffix;
        labels[base + 1] = "x" + suffix;
        labels[base + 2] = "a" + suffix;
        labels[base + 3] = "y" + suffix;
        labels[base + 4] = "b" + suffix;
        labels[base + 5] = "z" + suffix;
    }
    out.u = 24;
    out.v = 25;
    out.w = 26;
    labels[24] = "u";
    labels[25] = "v";
    labels[26] = "w";
    g.add_edge(out.u, out.a[0]);
    g.add_edge(out.u, out.a[1]);
    g.add_edge(out.v, out.a[2]);
    g.add_edge(out.v, out.a[3]);
    g.add_edge(out.u, out.w);
    g.add_edge(out.v, out.w);
    g.set_labels(std::move(labels));
    out.graph = std::move(g);
    return out;
}

}  // namespace qwalk
