#pragma once

#include "qwalk/algebraic.hpp"
#include "qwalk/charpoly.hpp"
#include "qwalk/graph.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <string>
#include <vector>

namespace qwalk {

/// Spectral decomposition A = sum_j lambda_j E_j with grouped eigenvalues
/// (descending) and orthogonal eigenprojectors. For integer-weighted graphs
/// the distinct-eigenvalue count is cross-checked against the exact
/// characteristic polynomial; on disagreement the exact count wins and a
/// diagnostic is recorded.
struct SpectralData {
    int n = 0;
    std::vector<double> eigenvalues;            // distinct, strictly descending
    std::vector<int> multiplicities;
    std::vector<Eigen::MatrixXd> projectors;
    std::vector<AlgebraicClass> classes;        // filled by classify_eigenvalues
    bool classified = false;
    std::vector<BigInt> exact_char_poly;        // ascending coefficients; empty if unavailable
    std::vector<std::string> diagnostics;

    // Exact rational adjacency for support re-checks (kept for modest sizes).
    std::vector<Rational> exact_adjacency;
    bool has_exact_adjacency = false;

    int index_of(double lambda, double tol = 1e-7) const {
        for (size_t i = 0; i < eigenvalues.size(); ++i)
            if (std::abs(eigenvalues[i] - lambda) <= tol) return static_cast<int>(i);
        return -1;
    }

    double spectral_radius() const {
        double m = 0;
        for (double l : eigenvalues) m = std::max(m, std::abs(l));
        return m;
    }
};

namespace detail {

/// Group sorted (ascending) eigenvalues into clusters separated by the
/// largest gaps so that exactly `count` clusters remain.
inline std::vector<int> cluster_by_largest_gaps(const Eigen::VectorXd& sorted, int count) {
    const int n = static_cast<int>(sorted.size());
    std::vector<std::pair<double, int>> gaps;  // (gap size, boundary index)
    for (int i = 0; i + 1 < n; ++i) gaps.push_back({sorted[i + 1] - sorted[i], i});
    std::sort(gaps.begin(), gaps.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<int> boundaries;
    for (int i = 0; i < count - 1 && i < static_cast<int>(gaps.size()); ++i)
        boundaries.push_back(gaps[i].second);
    std::sort(boundaries.begin(), boundaries.end());
    std::vector<int> cluster_of(n, 0);
    int cluster = 0;
    size_t b = 0;
    for (int i = 0; i < n; ++i) {
        cluster_of[i] = cluster;
        if (b < boundaries.size() && boundaries[b] == i) {
            ++cluster;
            ++b;
        }
    }
    return cluster_of;
}

}  // namespace detail

/// Exact characteristic polynomial det(xI - A); requires integer weights.
inline std::vector<BigInt> char_poly_exact(const Graph& g) {
    if (!g.integer_weighted())
        throw std::invalid_argument("char_poly_exact: graph is not integer-weighted");
    const int n = g.vertex_count();
    BigIntMatrix a(n);
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v) {
            auto w = g.exact_weight(u, v);
            BigInt z = numerator(*w);
            if (z != 0) {
                a.at(u, v) = z;
                a.at(v, u) = z;
            }
        }
    return char_poly_faddeev_leverrier(a);
}

struct DecomposeOptions {
    double tol = -1.0;            // < 0: default 1e-9 * max(1, ||A||_2)
    int exact_check_max_n = 48;   // cross-validate group count up to this size
    bool want_exact_adjacency = true;
};

inline SpectralData decompose(const Graph& g, const DecomposeOptions& opt = {}) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("decompose: empty graph");
    Eigen::MatrixXd a = g.adjacency();
    if (!a.allFinite()) throw std::invalid_argument("decompose: non-finite weights");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success) throw std::runtime_error("decompose: eigensolver failed");
    const Eigen::VectorXd vals = solver.eigenvalues();  // ascending
    const Eigen::MatrixXd vecs = solver.eigenvectors();

    const double norm2 = std::max(std::abs(vals[0]), std::abs(vals[n - 1]));
    const double tol = opt.tol > 0 ? opt.tol : 1e-9 * std::max(1.0, norm2);

    // Tolerance-based grouping over the ascending list.
    std::vector<int> cluster_of(n, 0);
    int clusters = 1;
    for (int i = 1; i < n; ++i) {
        if (vals[i] - vals[i - 1] > tol) ++clusters;
        cluster_of[i] = clusters - 1;
    }

    SpectralData out;
    out.n = n;

    if (g.integer_weighted() && n <= opt.exact_check_max_n) {
        out.exact_char_poly = char_poly_exact(g);
        const int exact_count = poly_distinct_root_count(out.exact_char_poly);
        if (exact_count != clusters) {
            out.diagnostics.push_back(
                "eigenvalue grouping adjusted to exact distinct-root count " +
                std::to_string(exact_count) + " (numeric grouping gave " +
                std::to_string(clusters) + ")");
            cluster_of = detail::cluster_by_largest_gaps(vals, exact_count);
            clusters = exact_count;
        }
    }

    // Assemble descending-order groups.
    out.eigenvalues.resize(clusters);
    out.multiplicities.assign(clusters, 0);
    out.projectors.assign(clusters, Eigen::MatrixXd::Zero(n, n));
    for (int i = 0; i < n; ++i) {
        const int c = clusters - 1 - cluster_of[i];  // ascending cluster -> descending slot
        out.multiplicities[c] += 1;
        out.projectors[c] += vecs.col(i) * vecs.col(i).transpose();
    }
    for (int c = 0; c < clusters; ++c) {
        double sum = 0;
        int count = 0;
        for (int i = 0; i < n; ++i) {
            if (clusters - 1 - cluster_of[i] == c) {
                sum += vals[i];
                ++count;
            }
        }
        out.eigenvalues[c] = sum / count;
    }

    if (opt.want_exact_adjacency && g.all_exact() && n <= 256) {
        out.exact_adjacency.assign(static_cast<size_t>(n) * n, Rational(0));
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                out.exact_adjacency[static_cast<size_t>(u) * n + v] = *g.exact_weight(u, v);
        out.has_exact_adjacency = true;
    }
    return out;
}

/// Fill the per-eigenvalue algebraic classes from the exact characteristic
/// polynomial. Requires an integer-weighted graph.
inline SpectralData classify_eigenvalues(const Graph& g, SpectralData spec) {
    if (spec.exact_char_poly.empty()) spec.exact_char_poly = char_poly_exact(g);
    spec.classes = classify_roots(spec.exact_char_poly, spec.eigenvalues);
    spec.classified = true;
    for (size_t i = 0; i < spec.classes.size(); ++i) {
        const auto& cls = spec.classes[i];
        if (cls.tag == AlgebraicClass::Tag::Other) continue;
        if (std::abs(cls.numeric() - spec.eigenvalues[i]) > 1e-9 * std::max(1.0, spec.spectral_radius()))
            spec.diagnostics.push_back("numeric eigenvalue " + std::to_string(spec.eigenvalues[i]) +
                                       " drifts from exact form " + cls.describe());
        spec.eigenvalues[i] = cls.numeric();  // snap to the verified exact value
    }
    return spec;
}

/// Convenience: decompose and classify when the exact char poly is tractable.
inline SpectralData analyze(const Graph& g, const DecomposeOptions& opt = {}) {
    SpectralData spec = decompose(g, opt);
    if (g.integer_weighted() && g.vertex_count() <= std::max(opt.exact_check_max_n, 64))
        spec = classify_eigenvalues(g, std::move(spec));
    return spec;
}

}  // namespace qwalk
