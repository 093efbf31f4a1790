#pragma once

#include "qwalk/numeric.hpp"

#include <Eigen/Dense>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qwalk {

/// Provenance of a generated graph; lets later analyses apply family-specific
/// theorems (odd-order Cayley obstructions, cycle/path parameter predicates).
struct FamilyInfo {
    enum class Kind {
        None,
        Path,
        Cycle,
        Complete,
        Star,
        Book,
        CayleyAbelian,
        CompleteMinusC4s,
    };
    Kind kind = Kind::None;
    std::vector<long long> params;        // Path/Cycle/Complete: n, Star/Book: l
    std::vector<long long> group_orders;  // CayleyAbelian moduli

    long long group_order() const {
        long long o = 1;
        for (long long m : group_orders) o *= m;
        return o;
    }

    /// True when the graph is known to be a Cayley graph over an abelian
    /// group of odd order (covers odd cycles and odd complete graphs).
    bool odd_abelian_cayley() const {
        switch (kind) {
            case Kind::CayleyAbelian: return group_order() % 2 == 1;
            case Kind::Cycle:
            case Kind::Complete: return !params.empty() && params[0] % 2 == 1;
            default: return false;
        }
    }
};

/// Weighted undirected graph. Weights are exact rationals when constructed
/// from integers/rational strings, plain doubles otherwise (quotient graphs
/// carry sqrt weights). Symmetry holds by construction: a weight is stored
/// once under the canonical (min,max) key. Treat instances as immutable once
/// built; all analyses take const references.
class Graph {
public:
    struct Weight {
        double value = 0.0;
        Rational exact;
        bool is_exact = false;
    };

    explicit Graph(int n = 0, bool allow_loops = false) : n_(n), loops_(allow_loops) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
    }

    int vertex_count() const { return n_; }
    bool allows_loops() const { return loops_; }

    void set_weight(int u, int v, const Rational& w) {
        check_pair(u, v);
        if (w == 0) {
            weights_.erase(key(u, v));
            return;
        }
        Weight& slot = weights_[key(u, v)];
        slot.value = to_double(w);
        slot.exact = w;
        slot.is_exact = true;
    }

    void set_weight(int u, int v, double w) {
        check_pair(u, v);
        if (w == 0.0) {
            weights_.erase(key(u, v));
            return;
        }
        Weight& slot = weights_[key(u, v)];
        slot.value = w;
        slot.is_exact = false;
    }

    void add_edge(int u, int v) { set_weight(u, v, Rational(1)); }
    void add_edge(int u, int v, long long w) { set_weight(u, v, Rational(w)); }

    bool has_edge(int u, int v) const { return weights_.count(key(u, v)) > 0; }

    double weight(int u, int v) const {
        auto it = weights_.find(key(u, v));
        return it == weights_.end() ? 0.0 : it->second.value;
    }

    /// Exact weight; absent edges are the exact zero. Returns nullopt when the
    /// stored weight has no exact representation.
    std::optional<Rational> exact_weight(int u, int v) const {
        auto it = weights_.find(key(u, v));
        if (it == weights_.end()) return Rational(0);
        if (!it->second.is_exact) return std::nullopt;
        return it->second.exact;
    }

    bool all_exact() const {
        for (const auto& [k, w] : weights_)
            if (!w.is_exact) return false;
        return true;
    }

    bool integer_weighted() const {
        for (const auto& [k, w] : weights_)
            if (!w.is_exact || !is_integer(w.exact)) return false;
        return true;
    }

    /// Simple: unweighted (all weights exactly 1) and loop-free.
    bool is_simple() const {
        for (const auto& [k, w] : weights_) {
            auto [u, v] = unkey(k);
            if (u == v) return false;
            if (!w.is_exact || w.exact != 1) return false;
        }
        return true;
    }

    int edge_count() const { return static_cast<int>(weights_.size()); }

    /// Edges as canonical (u<=v) pairs in lexicographic order.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(weights_.size());
        for (const auto& [k, w] : weights_) out.push_back(unkey(k));
        return out;
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for (int u = 0; u < n_; ++u)
            if (u != v && has_edge(u, v)) out.push_back(u);
        return out;
    }

    double degree(int v) const {
        double d = 0;
        for (int u = 0; u < n_; ++u) d += weight(u, v);
        return d;
    }

    Eigen::MatrixXd adjacency() const {
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
        for (const auto& [k, w] : weights_) {
            auto [u, v] = unkey(k);
            a(u, v) = w.value;
            a(v, u) = w.value;
        }
        return a;
    }

    /// Induced subgraph; vertex i of the result is verts[i].
    Graph induced(const std::vector<int>& verts) const {
        Graph g(static_cast<int>(verts.size()), loops_);
        for (size_t i = 0; i < verts.size(); ++i) {
            for (size_t j = i; j < verts.size(); ++j) {
                auto it = weights_.find(key(verts[i], verts[j]));
                if (it == weights_.end()) continue;
                if (it->second.is_exact)
                    g.set_weight(static_cast<int>(i), static_cast<int>(j), it->second.exact);
                else
                    g.set_weight(static_cast<int>(i), static_cast<int>(j), it->second.value);
            }
        }
        if (!labels_.empty()) {
            std::vector<std::string> sub;
            for (int v : verts) sub.push_back(labels_[v]);
            g.set_labels(std::move(sub));
        }
        return g;
    }

    const std::vector<std::string>& labels() const { return labels_; }

    void set_labels(std::vector<std::string> labels) {
        if (!labels.empty() && static_cast<int>(labels.size()) != n_)
            throw std::invalid_argument("label count must match vertex count");
        labels_ = std::move(labels);
    }

    std::string label(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
        return labels_.empty() ? std::to_string(v) : labels_[v];
    }

    /// Resolve a vertex given either a display label or an internal id.
    int vertex_by_label(const std::string& s) const {
        for (int v = 0; v < static_cast<int>(labels_.size()); ++v)
            if (labels_[v] == s) return v;
        try {
            size_t pos = 0;
            int v = std::stoi(s, &pos);
            if (pos == s.size() && v >= 0 && v < n_) return v;
        } catch (const std::exception&) {
        }
        return -1;
    }

    FamilyInfo family;

private:
    long long key(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
        if (u > v) std::swap(u, v);
        return static_cast<long long>(u) * n_ + v;
    }

    static std::pair<int, int> unkey_impl(long long k, int n) {
        return {static_cast<int>(k / n), static_cast<int>(k % n)};
    }
    std::pair<int, int> unkey(long long k) const { return unkey_impl(k, n_); }

    // Setters only: queries on (u,u) of a loop-free graph just read 0.
    void check_pair(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
        if (u == v && !loops_) throw std::invalid_argument("self-loop on a loop-free graph");
    }

    int n_;
    bool loops_;
    std::map<long long, Weight> weights_;
    std::vector<std::string> labels_;
};

}  // namespace qwalk
