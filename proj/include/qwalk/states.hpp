#pragma once

#include "qwalk/numeric.hpp"

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

namespace qwalk {

/// Unit vector over the vertices of a graph. Vertex, pair and (m,L)-states
/// keep their defining data; states built from rational coefficients also
/// carry an unnormalized exact copy so that support membership can be
/// re-decided exactly on borderline projector norms.
struct QuantumState {
    enum class Kind { Vertex, Pair, MState, Raw };

    Kind kind = Kind::Raw;
    Eigen::VectorXcd amplitudes;
    std::vector<int> vertices;            // defining vertices, if any
    bool has_exact = false;
    std::vector<Rational> exact_amps;     // unnormalized, real rational

    int dim() const { return static_cast<int>(amplitudes.size()); }

    static QuantumState vertex(int a, int n) {
        check_vertex(a, n);
        QuantumState s;
        s.kind = Kind::Vertex;
        s.vertices = {a};
        s.amplitudes = Eigen::VectorXcd::Zero(n);
        s.amplitudes[a] = 1.0;
        s.exact_amps.assign(n, Rational(0));
        s.exact_amps[a] = 1;
        s.has_exact = true;
        return s;
    }

    /// Pair state (e_a - e_b)/sqrt(2); a and b must differ.
    static QuantumState pair(int a, int b, int n) {
        check_vertex(a, n);
        check_vertex(b, n);
        if (a == b) throw std::invalid_argument("pair state needs two distinct vertices");
        QuantumState s;
        s.kind = Kind::Pair;
        s.vertices = {a, b};
        s.amplitudes = Eigen::VectorXcd::Zero(n);
        const double r = 1.0 / std::sqrt(2.0);
        s.amplitudes[a] = r;
        s.amplitudes[b] = -r;
        s.exact_amps.assign(n, Rational(0));
        s.exact_amps[a] = 1;
        s.exact_amps[b] = -1;
        s.has_exact = true;
        return s;
    }

    /// (m,L)-state: sum of l_k e_{v_k}, normalized. Repeated vertices are
    /// merged by summing their coefficients before normalization.
    static QuantumState mstate(const std::vector<int>& verts,
                               const std::vector<std::complex<double>>& coeffs, int n) {
        if (verts.size() != coeffs.size() || verts.empty())
            throw std::invalid_argument("mstate: need one coefficient per vertex");
        std::map<int, std::complex<double>> merged;
        for (size_t i = 0; i < verts.size(); ++i) {
            check_vertex(verts[i], n);
            merged[verts[i]] += coeffs[i];
        }
        QuantumState s;
        s.kind = Kind::MState;
        s.amplitudes = Eigen::VectorXcd::Zero(n);
        double norm2 = 0;
        bool real_rational = true;
        for (const auto& [v, c] : merged) {
            s.vertices.push_back(v);
            s.amplitudes[v] = c;
            norm2 += std::norm(c);
            if (c.imag() != 0.0 || c.real() != std::round(c.real())) real_rational = false;
        }
        if (norm2 < 1e-24) throw std::invalid_argument("mstate: coefficients sum to the zero vector");
        s.amplitudes /= std::sqrt(norm2);
        if (real_rational) {
            s.exact_amps.assign(n, Rational(0));
            for (const auto& [v, c] : merged)
                s.exact_amps[v] = Rational(static_cast<long long>(std::llround(c.real())));
            s.has_exact = true;
        }
        return s;
    }

    /// (m,L)-state from exact rational coefficients.
    static QuantumState mstate_exact(const std::vector<int>& verts,
                                     const std::vector<Rational>& coeffs, int n) {
        if (verts.size() != coeffs.size() || verts.empty())
            throw std::invalid_argument("mstate: need one coefficient per vertex");
        std::map<int, Rational> merged;
        for (size_t i = 0; i < verts.size(); ++i) {
            check_vertex(verts[i], n);
            merged[verts[i]] += coeffs[i];
        }
        QuantumState s;
        s.kind = Kind::MState;
        s.amplitudes = Eigen::VectorXcd::Zero(n);
        s.exact_amps.assign(n, Rational(0));
        Rational norm2(0);
        for (const auto& [v, c] : merged) {
            s.vertices.push_back(v);
            s.exact_amps[v] = c;
            norm2 += c * c;
        }
        if (norm2 == 0) throw std::invalid_argument("mstate: coefficients sum to the zero vector");
        const double scale = 1.0 / std::sqrt(to_double(norm2));
        for (const auto& [v, c] : merged) s.amplitudes[v] = to_double(c) * scale;
        s.has_exact = true;
        return s;
    }

    static QuantumState raw(Eigen::VectorXcd v) {
        const double norm = v.norm();
        if (norm < 1e-15) throw std::invalid_argument("raw state: zero vector");
        QuantumState s;
        s.kind = Kind::Raw;
        s.amplitudes = v / norm;
        return s;
    }

    /// |<this|other>|; 1 means equal up to global phase.
    double overlap(const QuantumState& other) const {
        return std::abs(amplitudes.dot(other.amplitudes));
    }

private:
    static void check_vertex(int a, int n) {
        if (a < 0 || a >= n) throw std::out_of_range("state vertex out of range");
    }
};

}  // namespace qwalk
