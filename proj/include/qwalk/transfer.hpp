#pragma once

#include "qwalk/graph.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/states.hpp"

#include <complex>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace qwalk {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

struct VertexPair {
    int a = 0, b = 0;

    bool operator==(const VertexPair& o) const { return a == o.a && b == o.b; }
    bool operator<(const VertexPair& o) const { return std::tie(a, b) < std::tie(o.a, o.b); }
    bool contains(int v) const { return v == a || v == b; }
};

/// U(t) = sum_j exp(i t lambda_j) E_j.
inline Eigen::MatrixXcd transition_matrix(const SpectralData& spec, double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("transition_matrix: non-finite time");
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(spec.n, spec.n);
    for (size_t j = 0; j < spec.eigenvalues.size(); ++j)
        u += std::exp(Complex(0, t * spec.eigenvalues[j])) * spec.projectors[j];
    return u;
}

/// Transfer amplitude <dst|U(t)|src> reduced to its d spectral coefficients;
/// evaluating at a time costs O(d).
struct TransferAmplitude {
    std::vector<double> eigenvalues;
    std::vector<Complex> coeffs;  // <dst|E_j|src>

    Complex at(double t) const {
        Complex acc(0, 0);
        for (size_t j = 0; j < eigenvalues.size(); ++j)
            acc += coeffs[j] * std::exp(Complex(0, t * eigenvalues[j]));
        return acc;
    }

    double fidelity_at(double t) const { return std::norm(at(t)); }
};

inline TransferAmplitude make_transfer_amplitude(const SpectralData& spec, const QuantumState& src,
                                                 const QuantumState& dst) {
    TransferAmplitude amp;
    amp.eigenvalues = spec.eigenvalues;
    amp.coeffs.reserve(spec.eigenvalues.size());
    for (const auto& proj : spec.projectors)
        amp.coeffs.push_back(dst.amplitudes.dot(proj * src.amplitudes));
    return amp;
}

/// |<dst|U(t)|src>|^2.
inline double fidelity(const SpectralData& spec, double t, const QuantumState& src,
                       const QuantumState& dst) {
    return make_transfer_amplitude(spec, src, dst).fidelity_at(t);
}

/// Evolve a state: U(t) psi.
inline Eigen::VectorXcd evolve(const SpectralData& spec, double t, const QuantumState& psi) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(spec.n);
    for (size_t j = 0; j < spec.eigenvalues.size(); ++j)
        out += std::exp(Complex(0, t * spec.eigenvalues[j])) * (spec.projectors[j] * psi.amplitudes);
    return out;
}

namespace detail {

/// Exact test of E_lambda psi = 0 for an integer eigenvalue of an exact
/// rational adjacency matrix: psi is orthogonal to ker(A - lambda I) iff it is
/// orthogonal to every kernel basis vector found by rational elimination.
inline std::optional<bool> exact_support_member(const SpectralData& spec, const BigInt& lambda,
                                                const std::vector<Rational>& psi) {
    if (!spec.has_exact_adjacency) return std::nullopt;
    const int n = spec.n;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m[i][j] = spec.exact_adjacency[static_cast<size_t>(i) * n + j];
            if (i == j) m[i][j] -= Rational(lambda);
        }
    // reduced row echelon form
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int piv = -1;
        for (int r = row; r < n; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[piv], m[row]);
        Rational lead = m[row][col];
        for (int j = 0; j < n; ++j) m[row][j] /= lead;
        for (int r = 0; r < n; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (int j = 0; j < n; ++j) m[r][j] -= f * m[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    // kernel basis: one vector per free column
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> basis(n, Rational(0));
        basis[free] = 1;
        for (size_t r = 0; r < pivot_col.size(); ++r) basis[pivot_col[r]] = -m[r][free];
        Rational dot(0);
        for (int i = 0; i < n; ++i)
            if (basis[i] != 0) dot += basis[i] * psi[i];
        if (dot != 0) return true;  // some eigenvector overlaps psi
    }
    return false;
}

}  // namespace detail

struct SupportResult {
    std::vector<int> indices;          // indices into spec.eigenvalues, ascending
    std::vector<double> norms;         // ||E_j psi|| for every distinct eigenvalue
    std::vector<std::string> warnings;

    std::vector<double> values(const SpectralData& spec) const {
        std::vector<double> v;
        for (int i : indices) v.push_back(spec.eigenvalues[i]);
        return v;
    }
};

/// Eigenvalue support {lambda : ||E_lambda psi|| > tol}. Norms inside the
/// borderline band (tol/10, 10 tol) are re-decided by exact rational
/// arithmetic when the eigenvalue is Integer-class and both the adjacency and
/// the state are exact; otherwise the borderline is flagged, never silent.
inline SupportResult eigenvalue_support(const SpectralData& spec, const QuantumState& psi,
                                        double tol = 1e-9) {
    SupportResult out;
    for (size_t j = 0; j < spec.eigenvalues.size(); ++j) {
        const double norm = (spec.projectors[j] * psi.amplitudes).norm();
        out.norms.push_back(norm);
        bool member = norm > tol;
        const bool borderline = norm > tol / 10 && norm < 10 * tol;
        if (borderline) {
            std::optional<bool> exact;
            if (psi.has_exact && spec.classified &&
                spec.classes[j].tag == AlgebraicClass::Tag::Integer) {
                exact = detail::exact_support_member(spec, spec.classes[j].int_value, psi.exact_amps);
            }
            if (exact.has_value()) {
                if (*exact != member) {
                    std::ostringstream os;
                    os << "support membership of eigenvalue " << spec.eigenvalues[j]
                       << " corrected by exact arithmetic (projector norm " << norm << ")";
                    out.warnings.push_back(os.str());
                }
                member = *exact;
            } else {
                std::ostringstream os;
                os << "projector norm " << norm << " for eigenvalue " << spec.eigenvalues[j]
                   << " is borderline (tol " << tol << "); no exact recheck available";
                out.warnings.push_back(os.str());
            }
        }
        if (member) out.indices.push_back(static_cast<int>(j));
    }
    return out;
}

struct CospectralResult {
    bool cospectral = false;
    std::vector<int> signs;  // per distinct eigenvalue; +1 where both projections vanish
};

/// E_lambda s1 = +- E_lambda s2 for every eigenvalue, with the realized signs.
inline CospectralResult strongly_cospectral(const SpectralData& spec, const QuantumState& s1,
                                            const QuantumState& s2, double tol = 1e-8) {
    CospectralResult out;
    out.signs.assign(spec.eigenvalues.size(), 1);
    for (size_t j = 0; j < spec.eigenvalues.size(); ++j) {
        Eigen::VectorXcd u = spec.projectors[j] * s1.amplitudes;
        Eigen::VectorXcd v = spec.projectors[j] * s2.amplitudes;
        if (u.norm() <= tol && v.norm() <= tol) continue;
        if ((u - v).norm() <= tol) {
            out.signs[j] = 1;
        } else if ((u + v).norm() <= tol) {
            out.signs[j] = -1;
        } else {
            return {false, {}};
        }
    }
    out.cospectral = true;
    return out;
}

/// Necessary condition for strong cospectrality of pair states in a simple
/// graph, from the walk-count identity at k = 2: the symmetric difference of
/// the two neighborhoods must have equal size on both sides. Returns nullopt
/// on non-simple graphs (inapplicable).
inline std::optional<bool> neighborhood_invariant(const Graph& g, int a, int b, int c, int d) {
    if (!g.is_simple()) return std::nullopt;
    auto symm_diff = [&g](int x, int y) {
        int count = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            const bool in_x = g.has_edge(v, x);
            const bool in_y = g.has_edge(v, y);
            if (in_x != in_y) ++count;
        }
        return count;
    };
    return symm_diff(a, b) == symm_diff(c, d);
}

struct PeriodicityCheck {
    enum class Status { Periodic, NotPeriodic, Unknown };
    Status status = Status::Unknown;
    std::string reason;

    bool periodic() const { return status == Status::Periodic; }
};

/// Periodicity of a state from its eigenvalue support: all support
/// eigenvalues integers, or all in one quadratic family (c + d sqrt(delta))/2
/// with shared c and delta (an integer eigenvalue fits with d = 0 iff
/// 2 lambda = c).
inline PeriodicityCheck is_periodic(const SpectralData& spec, const std::vector<int>& support) {
    PeriodicityCheck out;
    if (!spec.classified) {
        out.status = PeriodicityCheck::Status::Unknown;
        out.reason = "eigenvalue classification unavailable";
        return out;
    }
    bool all_integer = true;
    std::optional<long long> shared_c, shared_delta;
    for (int idx : support) {
        const AlgebraicClass& cls = spec.classes[idx];
        if (cls.tag == AlgebraicClass::Tag::Other) {
            out.status = PeriodicityCheck::Status::NotPeriodic;
            out.reason = "support contains " + cls.describe() +
                         ", which is neither an integer nor a quadratic integer";
            return out;
        }
        if (cls.tag == AlgebraicClass::Tag::Quadratic) {
            all_integer = false;
            if (shared_delta && *shared_delta != cls.delta) {
                out.status = PeriodicityCheck::Status::NotPeriodic;
                out.reason = "support mixes square-free parts " + std::to_string(*shared_delta) +
                             " and " + std::to_string(cls.delta);
                return out;
            }
            if (shared_c && *shared_c != cls.c) {
                out.status = PeriodicityCheck::Status::NotPeriodic;
                out.reason = "quadratic support eigenvalues have mixed c values " +
                             std::to_string(*shared_c) + " and " + std::to_string(cls.c);
                return out;
            }
            shared_delta = cls.delta;
            shared_c = cls.c;
        }
    }
    if (all_integer) {
        out.status = PeriodicityCheck::Status::Periodic;
        out.reason = "all support eigenvalues are integers";
        return out;
    }
    // integers must embed in the quadratic family with d = 0
    for (int idx : support) {
        const AlgebraicClass& cls = spec.classes[idx];
        if (cls.tag != AlgebraicClass::Tag::Integer) continue;
        if (BigInt(2) * cls.int_value != BigInt(*shared_c)) {
            out.status = PeriodicityCheck::Status::NotPeriodic;
            out.reason = "integer support eigenvalue " + cls.int_value.str() +
                         " does not fit the quadratic family (2*lambda != c = " +
                         std::to_string(*shared_c) + ")";
            return out;
        }
    }
    out.status = PeriodicityCheck::Status::Periodic;
    out.reason = "support lies in one quadratic family with c = " + std::to_string(*shared_c) +
                 ", delta = " + std::to_string(*shared_delta);
    return out;
}

enum class Verdict { CertifiedYes, CertifiedNo, EvidenceOnly };

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::CertifiedYes: return "certified-yes";
        case Verdict::CertifiedNo: return "certified-no";
        default: return "evidence-only";
    }
}

/// Time of the form num*pi/(den*sqrt(delta)); delta = 1 for rational
/// multiples of pi.
struct SymbolicTime {
    long long num = 0;
    long long den = 1;
    long long delta = 1;

    double value() const { return num * kPi / (den * std::sqrt(static_cast<double>(delta))); }

    std::string str() const {
        std::string s = (num == 1 ? "pi" : std::to_string(num) + "*pi");
        if (den != 1 || delta != 1) {
            s += "/";
            std::string d;
            if (delta != 1) d = "sqrt(" + std::to_string(delta) + ")";
            if (den != 1) d = std::to_string(den) + (d.empty() ? "" : "*" + d);
            s += (den != 1 && delta != 1) ? "(" + d + ")" : d;
        }
        return s;
    }
};

struct TransferCertificate {
    Verdict verdict = Verdict::EvidenceOnly;
    std::optional<double> time;
    std::optional<Complex> phase;
    std::optional<SymbolicTime> symbolic_time;
    double peak_fidelity = 0.0;
    std::string criterion;
    std::vector<double> support;  // support eigenvalues of the source state
    std::vector<std::string> warnings;
};

struct CertifyOptions {
    double support_tol = 1e-9;
    double cospectral_tol = 1e-8;
    double verify_tol = 1e-9;
    double fallback_horizon = 1000.0;  // evidence search when certainty is out of reach
};

struct PgstEvidence {
    double peak = 0.0;
    double time = 0.0;
    bool reached = false;
    double horizon = 0.0;
    double threshold = 0.999;
};

/// Coarse grid plus golden-section refinement of |<dst|U(t)|src>|^2 over
/// (0, horizon]. Evidence only; never a nonexistence proof.
inline PgstEvidence pgst_evidence(const SpectralData& spec, const QuantumState& src,
                                  const QuantumState& dst, double horizon = 1e4,
                                  double threshold = 0.999) {
    TransferAmplitude amp = make_transfer_amplitude(spec, src, dst);
    const double lam_max = std::max(spec.spectral_radius(), 1e-12);
    const double step = kPi / (50.0 * lam_max);

    PgstEvidence out;
    out.horizon = horizon;
    out.threshold = threshold;

    const size_t d = amp.eigenvalues.size();
    std::vector<Complex> rot(d), cur(d);
    for (size_t j = 0; j < d; ++j) {
        rot[j] = std::exp(Complex(0, step * amp.eigenvalues[j]));
        cur[j] = Complex(1, 0);
    }

    auto refine = [&amp](double lo, double hi) {
        const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
        double a = lo, b = hi;
        double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
        double f1 = amp.fidelity_at(x1), f2 = amp.fidelity_at(x2);
        for (int it = 0; it < 80; ++it) {
            if (f1 < f2) {
                a = x1; x1 = x2; f1 = f2;
                x2 = a + phi * (b - a); f2 = amp.fidelity_at(x2);
            } else {
                b = x2; x2 = x1; f2 = f1;
                x1 = b - phi * (b - a); f1 = amp.fidelity_at(x1);
            }
        }
        double t = (a + b) / 2;
        return std::make_pair(t, amp.fidelity_at(t));
    };

    double best_f = -1.0, best_t = step;
    const long long steps = static_cast<long long>(horizon / step);
    for (long long k = 1; k <= steps; ++k) {
        if (k % 8192 == 0) {
            const double t = k * step;  // resync against phase drift
            for (size_t j = 0; j < d; ++j) cur[j] = std::exp(Complex(0, t * amp.eigenvalues[j]));
        } else {
            for (size_t j = 0; j < d; ++j) cur[j] *= rot[j];
        }
        Complex acc(0, 0);
        for (size_t j = 0; j < d; ++j) acc += amp.coeffs[j] * cur[j];
        const double f = std::norm(acc);
        if (f > best_f) {
            best_f = f;
            best_t = k * step;
            if (f > threshold - 0.01) {
                auto [rt, rf] = refine(std::max(0.0, best_t - step), best_t + step);
                if (rf > best_f) { best_f = rf; best_t = rt; }
                if (best_f >= threshold) break;
            }
        }
    }
    auto [rt, rf] = refine(std::max(0.0, best_t - step), best_t + step);
    if (rf > best_f) { best_f = rf; best_t = rt; }
    out.peak = best_f;
    out.time = best_t;
    out.reached = best_f >= threshold;
    return out;
}

namespace detail {

struct Lattice {
    bool ok = false;
    bool quadratic = false;
    long long delta = 1;
    std::vector<long long> coords;  // integer eigenvalues, or the d coefficients
    std::string failure;
};

/// Integer lattice coordinates of the support eigenvalues: the eigenvalues
/// themselves (integer support) or the d of (c + d sqrt(delta))/2.
inline Lattice support_lattice(const SpectralData& spec, const std::vector<int>& support) {
    Lattice lat;
    bool any_quad = false;
    long long delta = 1, shared_c = 0;
    for (int idx : support) {
        const auto& cls = spec.classes[idx];
        if (cls.tag == AlgebraicClass::Tag::Quadratic) {
            any_quad = true;
            delta = cls.delta;
            shared_c = cls.c;
        }
    }
    for (int idx : support) {
        const auto& cls = spec.classes[idx];
        if (cls.tag == AlgebraicClass::Tag::Integer) {
            if (!any_quad) {
                lat.coords.push_back(to_long_checked(cls.int_value, "eigenvalue"));
            } else {
                if (BigInt(2) * cls.int_value != BigInt(shared_c)) {
                    lat.failure = "integer eigenvalue outside the quadratic family";
                    return lat;
                }
                lat.coords.push_back(0);
            }
        } else if (cls.tag == AlgebraicClass::Tag::Quadratic) {
            lat.coords.push_back(cls.d);
        } else {
            lat.failure = "unclassified eigenvalue in support";
            return lat;
        }
    }
    lat.ok = true;
    lat.quadratic = any_quad;
    lat.delta = delta;
    return lat;
}

}  // namespace detail

/// Full perfect-transfer certification pipeline for arbitrary states:
/// support equality, strong cospectrality, periodicity, then exact phase
/// alignment on the support lattice. The parity of the lattice differences
/// admits exactly two sign patterns, so a mismatch is a proof of
/// nonexistence, not a search failure.
inline TransferCertificate certify_pst(const Graph& g, const SpectralData& spec,
                                       const QuantumState& src, const QuantumState& dst,
                                       const CertifyOptions& opt = {}) {
    if (src.dim() != spec.n || dst.dim() != spec.n)
        throw std::invalid_argument("certify_pst: state dimension mismatch");
    if (src.overlap(dst) > 1.0 - 1e-12)
        throw std::invalid_argument("certify_pst: source and target are not linearly independent");

    TransferCertificate cert;

    // cheap necessary filter for pair states in simple graphs
    if (src.kind == QuantumState::Kind::Pair && dst.kind == QuantumState::Kind::Pair) {
        auto ni = neighborhood_invariant(g, src.vertices[0], src.vertices[1], dst.vertices[0],
                                         dst.vertices[1]);
        if (ni.has_value() && !*ni) {
            cert.verdict = Verdict::CertifiedNo;
            cert.criterion = "neighborhood-invariant-mismatch";
            return cert;
        }
    }

    SupportResult sup1 = eigenvalue_support(spec, src, opt.support_tol);
    SupportResult sup2 = eigenvalue_support(spec, dst, opt.support_tol);
    cert.warnings.insert(cert.warnings.end(), sup1.warnings.begin(), sup1.warnings.end());
    cert.warnings.insert(cert.warnings.end(), sup2.warnings.begin(), sup2.warnings.end());
    cert.support = sup1.values(spec);
    if (sup1.indices != sup2.indices) {
        cert.verdict = Verdict::CertifiedNo;
        cert.criterion = "eigenvalue-support-mismatch";
        return cert;
    }

    CospectralResult cosp = strongly_cospectral(spec, src, dst, opt.cospectral_tol);
    if (!cosp.cospectral) {
        cert.verdict = Verdict::CertifiedNo;
        cert.criterion = "strong-cospectrality-failure";
        return cert;
    }

    PeriodicityCheck period = is_periodic(spec, sup1.indices);
    if (period.status == PeriodicityCheck::Status::NotPeriodic) {
        cert.verdict = Verdict::CertifiedNo;
        cert.criterion = "periodicity-violation";
        cert.warnings.push_back(period.reason);
        return cert;
    }
    if (period.status == PeriodicityCheck::Status::Unknown) {
        PgstEvidence ev = pgst_evidence(spec, src, dst, opt.fallback_horizon, 1.0 - opt.verify_tol);
        cert.verdict = Verdict::EvidenceOnly;
        cert.criterion = "evidence-only (eigenvalue classification unavailable)";
        cert.peak_fidelity = ev.peak;
        cert.time = ev.time;
        cert.warnings.push_back(period.reason);
        return cert;
    }

    detail::Lattice lat = detail::support_lattice(spec, sup1.indices);
    if (!lat.ok) {
        cert.verdict = Verdict::EvidenceOnly;
        cert.criterion = "evidence-only (" + lat.failure + ")";
        return cert;
    }

    const int m = static_cast<int>(sup1.indices.size());
    long long g_lat = 0;
    std::vector<long long> diffs(m);
    for (int i = 0; i < m; ++i) {
        diffs[i] = lat.coords[i] - lat.coords[0];
        g_lat = gcd_ll(g_lat, diffs[i]);
    }
    if (g_lat == 0) {
        // single support class: the state is an eigenvector, and independence
        // already ruled the pair out in strong cospectrality; defensive.
        cert.verdict = Verdict::CertifiedNo;
        cert.criterion = "strong-cospectrality-failure";
        return cert;
    }

    bool aligned = true;
    for (int i = 0; i < m; ++i) {
        const int s = cosp.signs[sup1.indices[i]] * cosp.signs[sup1.indices[0]];
        const int parity = static_cast<int>(((diffs[i] / g_lat) % 2 + 2) % 2);
        if (s != (parity == 0 ? 1 : -1)) {
            aligned = false;
            break;
        }
    }
    if (!aligned) {
        cert.verdict = Verdict::CertifiedNo;
        cert.criterion = "phase-parity-obstruction";
        cert.warnings.push_back(
            "the cospectrality signs are not a character of the support difference lattice");
        return cert;
    }

    SymbolicTime sym;
    if (!lat.quadratic) {
        sym = {1, g_lat, 1};
    } else {
        long long num = 2, den = g_lat;
        const long long r = gcd_ll(num, den);
        sym = {num / r, den / r, lat.delta};
    }
    const double tau = sym.value();
    const double fid = fidelity(spec, tau, src, dst);
    if (fid < 1.0 - opt.verify_tol) {
        cert.verdict = Verdict::EvidenceOnly;
        cert.criterion = "evidence-only (aligned candidate failed numeric re-verification)";
        cert.peak_fidelity = fid;
        cert.time = tau;
        std::ostringstream os;
        os << "candidate time " << sym.str() << " gave fidelity " << fid;
        cert.warnings.push_back(os.str());
        return cert;
    }

    cert.verdict = Verdict::CertifiedYes;
    cert.criterion = lat.quadratic ? "quadratic-lattice-phase-alignment"
                                   : "integer-lattice-phase-alignment";
    cert.time = tau;
    cert.symbolic_time = sym;
    cert.peak_fidelity = fid;
    // realized global phase; by construction exp(i tau lambda_0) * sign_0
    Eigen::VectorXcd evolved = evolve(spec, tau, src);
    cert.phase = dst.amplitudes.dot(evolved);
    return cert;
}

struct RevivalResult {
    Complex alpha;
    Complex beta;
    double residual = 0.0;
};

/// Fractional revival: U(t) s1 = alpha s1 + beta s2 with nonzero beta.
/// The pair (alpha, beta) is solved from the Gram system of (s1, s2), so the
/// states need not be orthogonal.
inline std::optional<RevivalResult> fractional_revival_check(const SpectralData& spec, double t,
                                                             const QuantumState& s1,
                                                             const QuantumState& s2,
                                                             double tol = 1e-8) {
    Eigen::VectorXcd u = evolve(spec, t, s1);
    Eigen::Matrix2cd gram;
    gram << s1.amplitudes.dot(s1.amplitudes), s1.amplitudes.dot(s2.amplitudes),
        s2.amplitudes.dot(s1.amplitudes), s2.amplitudes.dot(s2.amplitudes);
    Eigen::Vector2cd rhs;
    rhs << s1.amplitudes.dot(u), s2.amplitudes.dot(u);
    Eigen::Vector2cd sol = gram.fullPivLu().solve(rhs);
    const Complex alpha = sol[0], beta = sol[1];
    const double residual = (u - alpha * s1.amplitudes - beta * s2.amplitudes).norm();
    if (residual > tol || std::abs(beta) <= tol) return std::nullopt;
    return RevivalResult{alpha, beta, residual};
}

struct SedentaryEstimate {
    double inf_estimate = 1.0;
    double time_of_min = 0.0;
    double horizon = 0.0;
};

/// Grid infimum estimate of |U(t)_{aa}| over (0, horizon]; an upper bound on
/// the true infimum.
inline SedentaryEstimate sedentary_bound(const SpectralData& spec, int a, double horizon = 1e3,
                                         double step = -1.0) {
    if (a < 0 || a >= spec.n) throw std::out_of_range("sedentary_bound: vertex out of range");
    const double lam_max = std::max(spec.spectral_radius(), 1e-12);
    if (step <= 0) step = kPi / (100.0 * lam_max);

    const size_t d = spec.eigenvalues.size();
    std::vector<double> weight(d);
    for (size_t j = 0; j < d; ++j) weight[j] = spec.projectors[j](a, a);

    auto magnitude = [&](double t) {
        Complex acc(0, 0);
        for (size_t j = 0; j < d; ++j) acc += weight[j] * std::exp(Complex(0, t * spec.eigenvalues[j]));
        return std::abs(acc);
    };

    std::vector<Complex> rot(d), cur(d);
    for (size_t j = 0; j < d; ++j) {
        rot[j] = std::exp(Complex(0, step * spec.eigenvalues[j]));
        cur[j] = Complex(1, 0);
    }
    double best = 2.0, best_t = step;
    const long long steps = static_cast<long long>(horizon / step);
    for (long long k = 1; k <= steps; ++k) {
        if (k % 8192 == 0) {
            const double t = k * step;
            for (size_t j = 0; j < d; ++j) cur[j] = std::exp(Complex(0, t * spec.eigenvalues[j]));
        } else {
            for (size_t j = 0; j < d; ++j) cur[j] *= rot[j];
        }
        Complex acc(0, 0);
        for (size_t j = 0; j < d; ++j) acc += weight[j] * cur[j];
        const double f = std::abs(acc);
        if (f < best) {
            best = f;
            best_t = k * step;
        }
    }
    // golden-section minimization around the grid minimum
    {
        const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
        double a0 = std::max(step / 2, best_t - step), b0 = best_t + step;
        double x1 = b0 - phi * (b0 - a0), x2 = a0 + phi * (b0 - a0);
        double f1 = magnitude(x1), f2 = magnitude(x2);
        for (int it = 0; it < 80; ++it) {
            if (f1 > f2) {
                a0 = x1; x1 = x2; f1 = f2;
                x2 = a0 + phi * (b0 - a0); f2 = magnitude(x2);
            } else {
                b0 = x2; x2 = x1; f2 = f1;
                x1 = b0 - phi * (b0 - a0); f1 = magnitude(x1);
            }
        }
        const double t = (a0 + b0) / 2;
        const double f = magnitude(t);
        if (f < best) { best = f; best_t = t; }
    }
    return {best, best_t, horizon};
}

}  // namespace qwalk
