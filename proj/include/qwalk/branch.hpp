#pragma once

#include "qwalk/graph.hpp"

#include <algorithm>
#include <vector>

namespace qwalk {

/// Two isomorphic branches of a host graph: disjoint vertex sets copy1 and
/// copy2, a bijection f between them, and the induced switching permutation
/// (swap each twin pair, fix everything else).
struct BranchPair {
    std::vector<int> copy1;
    std::vector<int> copy2;  // copy2[i] = f(copy1[i])

    int map(int a) const {
        for (size_t i = 0; i < copy1.size(); ++i)
            if (copy1[i] == a) return copy2[i];
        return -1;
    }

    int inverse_map(int b) const {
        for (size_t i = 0; i < copy2.size(); ++i)
            if (copy2[i] == b) return copy1[i];
        return -1;
    }

    /// Switching permutation as an image table over n vertices.
    std::vector<int> switching_permutation(int n) const {
        std::vector<int> perm(n);
        for (int v = 0; v < n; ++v) perm[v] = v;
        for (size_t i = 0; i < copy1.size(); ++i) {
            perm[copy1[i]] = copy2[i];
            perm[copy2[i]] = copy1[i];
        }
        return perm;
    }

    bool well_formed(int n) const {
        if (copy1.size() != copy2.size() || copy1.empty()) return false;
        std::vector<int> all = copy1;
        all.insert(all.end(), copy2.begin(), copy2.end());
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
        return all.front() >= 0 && all.back() < n;
    }
};

/// Does the image table define an automorphism? Exact comparison when every
/// weight is exact, 1e-12 otherwise.
inline bool is_automorphism(const Graph& g, const std::vector<int>& perm) {
    const int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n) return false;
    std::vector<bool> seen(n, false);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = true;
    }
    const bool exact = g.all_exact();
    for (int u = 0; u < n; ++u) {
        for (int v = u; v < n; ++v) {
            if (exact) {
                if (*g.exact_weight(u, v) != *g.exact_weight(perm[u], perm[v])) return false;
            } else {
                if (std::abs(g.weight(u, v) - g.weight(perm[u], perm[v])) > 1e-12) return false;
            }
        }
    }
    return true;
}

}  // namespace qwalk
