#pragma once

#include "qwalk/branch.hpp"
#include "qwalk/graph.hpp"

#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace qwalk {

/// Path on n vertices, labeled 1..n.
inline Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    Graph g(n);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    g.set_labels(std::move(labels));
    g.family.kind = FamilyInfo::Kind::Path;
    g.family.params = {n};
    return g;
}

/// Cycle on n vertices, labeled 0..n-1; j ~ k iff j-k = +-1 mod n.
inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    Graph g(n);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    g.set_labels(std::move(labels));
    g.family.kind = FamilyInfo::Kind::Cycle;
    g.family.params = {n};
    return g;
}

inline Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    g.family.kind = FamilyInfo::Kind::Complete;
    g.family.params = {n};
    return g;
}

/// Star K_{1,l}: hub (id 0, label "u") plus l leaves labeled a1..al.
inline Graph star_graph(int l) {
    if (l < 1) throw std::invalid_argument("star needs l >= 1");
    Graph g(l + 1);
    std::vector<std::string> labels{"u"};
    for (int i = 1; i <= l; ++i) {
        g.add_edge(0, i);
        labels.push_back("a" + std::to_string(i));
    }
    g.set_labels(std::move(labels));
    g.family.kind = FamilyInfo::Kind::Star;
    g.family.params = {l};
    return g;
}

inline std::string product_label(const Graph& g, const Graph& h, int a, int x) {
    return "(" + g.label(a) + "," + h.label(x) + ")";
}

/// Cartesian product: (a,x) ~ (b,y) iff (a=b and x~y) or (x=y and a~b).
/// Vertex (a,x) gets id a*|V(h)| + x.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    if (ng == 0 || nh == 0) throw std::invalid_argument("product of empty graph");
    Graph p(ng * nh, g.allows_loops() || h.allows_loops());
    auto id = [nh](int a, int x) { return a * nh + x; };
    for (int a = 0; a < ng; ++a)
        for (auto [x, y] : h.edges()) {
            auto w = h.exact_weight(x, y);
            if (w) p.set_weight(id(a, x), id(a, y), *w);
            else p.set_weight(id(a, x), id(a, y), h.weight(x, y));
        }
    for (int x = 0; x < nh; ++x)
        for (auto [a, b] : g.edges()) {
            auto w = g.exact_weight(a, b);
            if (w) p.set_weight(id(a, x), id(b, x), *w);
            else p.set_weight(id(a, x), id(b, x), g.weight(a, b));
        }
    std::vector<std::string> labels;
    for (int a = 0; a < ng; ++a)
        for (int x = 0; x < nh; ++x) labels.push_back(product_label(g, h, a, x));
    p.set_labels(std::move(labels));
    return p;
}

/// Book graph B_l = K_{1,l} x P_2 with the traditional page labels:
/// hubs u,v and page tips a_k (u side) / b_k (v side).
inline Graph book_graph(int l) {
    Graph b = cartesian_product(star_graph(l), path_graph(2));
    std::vector<std::string> labels(b.vertex_count());
    labels[0] = "u";
    labels[1] = "v";
    for (int k = 1; k <= l; ++k) {
        labels[2 * k] = "a" + std::to_string(k);
        labels[2 * k + 1] = "b" + std::to_string(k);
    }
    b.set_labels(std::move(labels));
    b.family.kind = FamilyInfo::Kind::Book;
    b.family.params = {l};
    return b;
}

/// Join: disjoint union plus all cross edges with weight 1.
inline Graph join(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    Graph j(ng + nh, g.allows_loops() || h.allows_loops());
    auto copy_into = [&j](const Graph& src, int offset) {
        for (auto [u, v] : src.edges()) {
            auto w = src.exact_weight(u, v);
            if (w) j.set_weight(u + offset, v + offset, *w);
            else j.set_weight(u + offset, v + offset, src.weight(u, v));
        }
    };
    copy_into(g, 0);
    copy_into(h, ng);
    for (int a = 0; a < ng; ++a)
        for (int x = 0; x < nh; ++x) j.add_edge(a, ng + x);
    std::vector<std::string> labels;
    for (int a = 0; a < ng; ++a) labels.push_back("L:" + g.label(a));
    for (int x = 0; x < nh; ++x) labels.push_back("R:" + h.label(x));
    j.set_labels(std::move(labels));
    return j;
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    Graph u(ng + nh, g.allows_loops() || h.allows_loops());
    for (auto [a, b] : g.edges()) {
        auto w = g.exact_weight(a, b);
        if (w) u.set_weight(a, b, *w);
        else u.set_weight(a, b, g.weight(a, b));
    }
    for (auto [a, b] : h.edges()) {
        auto w = h.exact_weight(a, b);
        if (w) u.set_weight(a + ng, b + ng, *w);
        else u.set_weight(a + ng, b + ng, h.weight(a, b));
    }
    return u;
}

/// Corona g o h: one copy of g, |V(g)| copies of h, vertex i of g joined to
/// every vertex of copy i. Copy i of h occupies ids ng + i*nh ... ng + (i+1)*nh - 1.
inline Graph corona(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    Graph c(ng + ng * nh, g.allows_loops() || h.allows_loops());
    for (auto [a, b] : g.edges()) {
        auto w = g.exact_weight(a, b);
        if (w) c.set_weight(a, b, *w);
        else c.set_weight(a, b, g.weight(a, b));
    }
    for (int i = 0; i < ng; ++i) {
        const int base = ng + i * nh;
        for (auto [x, y] : h.edges()) {
            auto w = h.exact_weight(x, y);
            if (w) c.set_weight(base + x, base + y, *w);
            else c.set_weight(base + x, base + y, h.weight(x, y));
        }
        for (int x = 0; x < nh; ++x) c.add_edge(i, base + x);
    }
    return c;
}

/// Element of a finite abelian product group, one residue per modulus.
using GroupElem = std::vector<long long>;

inline GroupElem group_negate(const GroupElem& e, const std::vector<long long>& orders) {
    GroupElem r(e.size());
    for (size_t i = 0; i < e.size(); ++i) r[i] = ((-e[i]) % orders[i] + orders[i]) % orders[i];
    return r;
}

inline GroupElem group_sub(const GroupElem& a, const GroupElem& b, const std::vector<long long>& orders) {
    GroupElem r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = ((a[i] - b[i]) % orders[i] + orders[i]) % orders[i];
    return r;
}

/// Cayley graph over Z_{m1} x ... x Z_{mk} with connection set S; a ~ b iff
/// a - b in S. Requires S = -S and 0 not in S.
inline Graph cayley_abelian(const std::vector<long long>& orders, std::vector<GroupElem> connection) {
    if (orders.empty()) throw std::invalid_argument("cayley: empty order list");
    long long total = 1;
    for (long long m : orders) {
        if (m < 1) throw std::invalid_argument("cayley: moduli must be positive");
        total *= m;
        if (total > 100000) throw std::invalid_argument("cayley: group too large");
    }
    std::set<GroupElem> s;
    for (auto e : connection) {
        if (e.size() != orders.size())
            throw std::invalid_argument("cayley: connection element arity mismatch");
        for (size_t i = 0; i < e.size(); ++i) e[i] = ((e[i] % orders[i]) + orders[i]) % orders[i];
        if (std::all_of(e.begin(), e.end(), [](long long x) { return x == 0; }))
            throw std::invalid_argument("cayley: connection set contains the identity");
        s.insert(e);
    }
    for (const auto& e : s)
        if (!s.count(group_negate(e, orders)))
            throw std::invalid_argument("cayley: connection set not closed under negation");

    const int n = static_cast<int>(total);
    std::vector<GroupElem> elems;  // mixed-radix order: id of (e1,..,ek) is ((e1*m2)+e2)*m3+...
    elems.reserve(n);
    GroupElem cur(orders.size(), 0);
    for (int i = 0; i < n; ++i) {
        elems.push_back(cur);
        for (int j = static_cast<int>(orders.size()) - 1; j >= 0; --j) {
            if (++cur[j] < orders[j]) break;
            cur[j] = 0;
        }
    }

    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (s.count(group_sub(elems[i], elems[j], orders))) g.add_edge(i, j);

    std::vector<std::string> labels;
    for (const auto& e : elems) {
        std::ostringstream os;
        os << "(";
        for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
        os << ")";
        labels.push_back(os.str());
    }
    g.set_labels(std::move(labels));
    g.family.kind = FamilyInfo::Kind::CayleyAbelian;
    g.family.group_orders = orders;
    return g;
}

/// K_n minus the edges of vertex-disjoint 4-cycles. Each cycle lists its four
/// vertices in cyclic order; the removed edges are consecutive pairs only,
/// the diagonals stay.
inline Graph complete_minus_c4s(int n, const std::vector<std::vector<int>>& cycles) {
    Graph g = complete_graph(n);
    std::set<int> used;
    for (const auto& c : cycles) {
        if (c.size() != 4) throw std::invalid_argument("complete-minus-c4s: cycle needs 4 vertices");
        for (int v : c) {
            if (v < 0 || v >= n) throw std::invalid_argument("complete-minus-c4s: vertex out of range");
            if (!used.insert(v).second)
                throw std::invalid_argument("complete-minus-c4s: cycles must be vertex-disjoint");
        }
        for (int i = 0; i < 4; ++i) g.set_weight(c[i], c[(i + 1) % 4], Rational(0));
    }
    g.family.kind = FamilyInfo::Kind::CompleteMinusC4s;
    g.family.params = {n};
    return g;
}

/// One attachment: branch vertex `branch_vertex` of X1 connects to host
/// vertex `host_vertex` with the given weight (in both copies).
struct Attachment {
    int branch_vertex = 0;
    int host_vertex = 0;
    Rational weight = Rational(1);
};

struct BranchConstruction {
    Graph graph;
    BranchPair branches;
    bool disconnected_host = false;  // empty host flagged, not rejected
};

/// Host plus two identically wired copies of x1. Layout: host vertices first,
/// then copy 1, then copy 2; the twin of copy-1 vertex v is v + |V(x1)|.
inline BranchConstruction attach_branches(const Graph& host, const Graph& x1,
                                          const std::vector<Attachment>& attach) {
    const int nh = host.vertex_count(), nx = x1.vertex_count();
    if (nx < 1) throw std::invalid_argument("attach_branches: empty branch");
    Graph g(nh + 2 * nx, host.allows_loops() || x1.allows_loops());
    for (auto [u, v] : host.edges()) {
        auto w = host.exact_weight(u, v);
        if (w) g.set_weight(u, v, *w);
        else g.set_weight(u, v, host.weight(u, v));
    }
    for (int copy = 0; copy < 2; ++copy) {
        const int base = nh + copy * nx;
        for (auto [u, v] : x1.edges()) {
            auto w = x1.exact_weight(u, v);
            if (w) g.set_weight(base + u, base + v, *w);
            else g.set_weight(base + u, base + v, x1.weight(u, v));
        }
    }
    for (const auto& a : attach) {
        if (a.branch_vertex < 0 || a.branch_vertex >= nx || a.host_vertex < 0 || a.host_vertex >= nh)
            throw std::invalid_argument("attach_branches: attachment out of range");
        g.set_weight(nh + a.branch_vertex, a.host_vertex, a.weight);
        g.set_weight(nh + nx + a.branch_vertex, a.host_vertex, a.weight);
    }
    std::vector<std::string> labels;
    for (int v = 0; v < nh; ++v) labels.push_back("h:" + host.label(v));
    for (int v = 0; v < nx; ++v) labels.push_back("x1:" + x1.label(v));
    for (int v = 0; v < nx; ++v) labels.push_back("x2:" + x1.label(v));
    g.set_labels(std::move(labels));

    BranchConstruction out{std::move(g), BranchPair{}, nh == 0};
    for (int v = 0; v < nx; ++v) {
        out.branches.copy1.push_back(nh + v);
        out.branches.copy2.push_back(nh + nx + v);
    }
    return out;
}

}  // namespace qwalk
